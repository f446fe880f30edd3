#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mvkit/biconvex.hpp"
#include "mvkit/lusztig.hpp"

namespace mvkit {

using ContextPtr = std::shared_ptr<const RootContext>;

// Decorated GGMS polytope stored through its vertex maps w -> mu^w (tits) and w -> mu_w (anti)
// for all w with l(w) <= L.
struct GGMSPolytope {
  ContextPtr ctx;
  RootVector weight;
  int L = 0;
  std::map<Word, RootVector> tits;
  std::map<Word, RootVector> anti;
  std::vector<RootVector> vertices;                         // distinct, sorted
  std::vector<std::pair<Coweight, Partition>> partitions;  // affine only
  bool partial = false;
  std::vector<RootVector> path;     // vertices along the defining order, bottom first
  std::vector<std::string> issues;  // problems found while building the vertex maps
};

// Length bound after which every vertex of a polytope of weight height D is reached.
int stabilization_length(const RootContext& ctx, std::int64_t D);

// Recomputes vertices from the vertex maps.
void collect_vertices(GGMSPolytope& P);

// Builds the vertex maps from a list of points by maximizing over each chamber.
GGMSPolytope polytope_from_vertices(ContextPtr ctx, const std::vector<RootVector>& points,
                                    std::vector<std::pair<Coweight, Partition>> partitions = {},
                                    std::optional<int> L = std::nullopt);

// Reduced word of the longest element whose inversion order is the given finite slice.
Word word_from_order(const RootContext& ctx, const ConvexOrderSlice& o);

// Vertices mu(A) for the terminal sections A of the datum's order, bottom first.
std::vector<RootVector> path_vertices(const RootContext& ctx, const LusztigDatum& d);

GGMSPolytope polytope_from_datum(ContextPtr ctx, const LusztigDatum& d);

RootVector vertex_mu(const GGMSPolytope& P, const BiconvexSet& A);
Rational support_function(const GGMSPolytope& P, const Coweight& theta);
std::vector<RootVector> maximizers(const GGMSPolytope& P, const Coweight& theta);

struct Face2 {
  Coweight theta;
  std::string classification;  // "A1xA1", "A2" or "affineA1"
  std::vector<RootVector> cycle;
  RootVector beta1, beta2;  // plane basis used for side lengths and drawing
};

// Classification of the rank-2 root system cut out by theta; throws if not rank 2.
std::string classify_codim2(const RootContext& ctx, const Coweight& theta, RootVector* beta1 = nullptr,
                            RootVector* beta2 = nullptr);

// Coordinates of x in the basis (b1, b2) of a rank-2 sublattice, if x lies in it.
std::optional<std::pair<Rational, Rational>> plane_coords(const RootVector& x, const RootVector& b1,
                                                          const RootVector& b2);

Face2 extract_2face(const GGMSPolytope& P, const Coweight& theta);

struct FaceCheck {
  std::string classification;
  std::string status;  // "pass", "fail", "degenerate" or "unchecked-open"
  Coweight theta;
  std::string detail;
};

struct MVReport {
  bool ok = true;
  std::vector<std::string> violations;
  std::vector<FaceCheck> faces;
  std::vector<std::string> notes;
  int count(const std::string& classification, const std::string& status) const;
};

struct MVOptions {
  // Also apply the rank-2 relations to faces P_theta that are points or segments
  // (the vertex-map form of the conditions). Off by default: only 2-faces are constrained.
  bool strict = false;
};

MVReport validate_mv(const GGMSPolytope& P, const MVOptions& opts = {});

// Side lengths of an A2 hexagon, read from the bottom vertex: (a1,a12,a2) along beta1 first
// and (b2,b12,b1) along beta2 first.
struct HexagonSides {
  std::int64_t a1, a12, a2, b2, b12, b1;
};
std::optional<HexagonSides> hexagon_sides(const Face2& f, std::string* why = nullptr);

// Vertex maps extended past L by maximizing over the stored vertices.
RootVector tits_vertex(const GGMSPolytope& P, const WeylElt& w);
RootVector anti_vertex(const GGMSPolytope& P, const WeylElt& w);

GGMSPolytope minkowski_sum(const GGMSPolytope& P, const GGMSPolytope& Q);
GGMSPolytope dual_reflect(const GGMSPolytope& P);

bool same_vertex_maps(const GGMSPolytope& P, const GGMSPolytope& Q);

}  // namespace mvkit
