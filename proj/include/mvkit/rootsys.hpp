#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvkit/core.hpp"

namespace mvkit {

enum class Kind { finite, affine, other };

std::string kind_name(Kind k);

// Symmetric Cartan datum of a loop-free multigraph: a_ij = -(number of edges i--j).
struct CartanDatum {
  std::vector<std::string> labels;
  bool numeric_labels = true;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> cartan;
  Kind kind = Kind::other;

  int rank() const { return static_cast<int>(labels.size()); }
  int index_of(const std::string& label) const;
  int a(int i, int j) const { return cartan[i][j]; }
};

using DatumPtr = std::shared_ptr<const CartanDatum>;

DatumPtr make_datum(const std::vector<std::string>& labels,
                    const std::vector<std::pair<int, int>>& edges, bool numeric_labels = true,
                    std::optional<Kind> kind_hint = std::nullopt);

// Builds a datum from a type name: A3, D4, E6, A1xA1, ~A1, A2~, ~D4, ~E8, ...
DatumPtr datum_from_type(const std::string& type);

std::int64_t bilinear_form(const CartanDatum& d, const RootVector& x, const RootVector& y);

enum class RootClass { real, imaginary, not_a_root };
std::string root_class_name(RootClass c);

RootClass classify_root(const CartanDatum& d, const RootVector& nu);

struct AffineData {
  DatumPtr datum;
  RootVector delta;
  int extending = 0;
  std::vector<int> I0;
  std::vector<Coweight> varpi;  // aligned with I0
  int r = 0;
  std::vector<std::vector<std::int64_t>> spherical;  // all spherical roots in I0 coordinates

  // Coordinates on I0 after substituting the extending coordinate using delta.
  std::vector<std::int64_t> pi(const RootVector& v) const;
  RootVector embed(const std::vector<std::int64_t>& c) const;
  // Minimal positive real lift of a spherical root.
  RootVector iota(const std::vector<std::int64_t>& c) const;
  // Spherical roots positive for the basis {pi(alpha_i) : i in I0}.
  std::vector<std::vector<std::int64_t>> spherical_positive() const;
};

AffineData affine_data(DatumPtr d, int extending_node);
AffineData default_affine_data(DatumPtr d);

std::vector<Coweight> spherical_coweights(const AffineData& a);

// Directed edges given as (source index, target index); must cover each edge once, acyclic.
Coweight orientation_coweight(const AffineData& a,
                              const std::vector<std::pair<int, int>>& orientation);

// All orientations of the edge multiset that are acyclic, as (src,dst) lists aligned with d.edges.
std::vector<std::vector<std::pair<int, int>>> acyclic_orientations(const CartanDatum& d);

// Positive roots of a finite-type datum.
std::vector<RootVector> finite_positive_roots(const CartanDatum& d);

// Positive real roots of height <= H (finite or affine).
std::vector<RootVector> positive_real_roots(const CartanDatum& d, std::int64_t H);
std::vector<RootVector> positive_real_roots(const AffineData& a, std::int64_t H);

// Coweight acting on a root vector via the contragredient simple reflection s_i.
Coweight reflect_coweight(const CartanDatum& d, int i, const Coweight& theta);
RootVector reflect_root(const CartanDatum& d, int i, const RootVector& x);

// Fundamental coweight omega_i of the full space: value 1 on alpha_i, 0 on the others.
Coweight fundamental_coweight(const CartanDatum& d, int i);
// The height functional.
Coweight rho_check(const CartanDatum& d);

}  // namespace mvkit
