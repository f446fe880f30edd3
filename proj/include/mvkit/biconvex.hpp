#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mvkit/rootsys.hpp"
#include "mvkit/weyl.hpp"

namespace mvkit {

// Context shared by all height-truncated computations on one datum.
struct RootContext {
  DatumPtr datum;
  std::optional<AffineData> affine;

  explicit RootContext(DatumPtr d);
  RootContext(DatumPtr d, AffineData a);
  bool is_affine() const { return affine.has_value(); }
  bool is_delta(const RootVector& v) const;
  bool is_imaginary(const RootVector& v) const;  // positive multiple of delta
  bool is_positive_root(const RootVector& v) const;
  // E_H: positive real roots of height <= H plus a single delta (if it fits).
  std::vector<RootVector> E(std::int64_t H) const;
  // E'_H: like E_H but with every multiple of delta of height <= H.
  std::vector<RootVector> E_full(std::int64_t H) const;
};

struct BiconvexSet {
  enum class Kind { finite, cofinite, theta_min, theta_max };
  Kind kind = Kind::finite;
  std::optional<WeylElt> w;
  Coweight theta;

  static BiconvexSet finite_of(const WeylElt& w);
  static BiconvexSet cofinite_of(const WeylElt& w);
  static BiconvexSet min_of(const Coweight& theta);
  static BiconvexSet max_of(const Coweight& theta);

  bool contains(const RootContext& ctx, const RootVector& alpha) const;
  std::vector<RootVector> truncate(const RootContext& ctx, std::int64_t H) const;
};

using RootSet = std::set<RootVector>;

bool validate_biconvex_truncated(const RootContext& ctx, const RootSet& S, std::int64_t H,
                                 std::string* why = nullptr);

struct ConvexOrderSlice {
  std::int64_t H = 0;
  std::vector<RootVector> roots;  // least first
  std::optional<Coweight> theta;  // set when built from a coweight

  std::optional<std::size_t> delta_position(const RootContext& ctx) const;
  std::optional<std::size_t> position(const RootVector& r) const;
};

ConvexOrderSlice order_from_coweight(const RootContext& ctx, const Coweight& theta, std::int64_t H);

// Order whose initial sections are the inversion sets of prefixes of a reduced word.
ConvexOrderSlice order_from_word(const RootContext& ctx, const Word& word);

bool validate_convex_order(const RootContext& ctx, const ConvexOrderSlice& o,
                           std::string* why = nullptr);

struct OrderMove {
  ConvexOrderSlice slice;
  std::string label;  // "commutation" or "braidA2"
  std::size_t position = 0;
};

OrderMove order_move(const RootContext& ctx, const ConvexOrderSlice& o, std::size_t position);

// All legal non-imaginary moves at any position.
std::vector<OrderMove> order_moves(const RootContext& ctx, const ConvexOrderSlice& o);

// X = pi({beta above delta}), validated as a positive system of the spherical roots.
std::vector<std::vector<std::int64_t>> positive_system_above_delta(const RootContext& ctx,
                                                                   const ConvexOrderSlice& o);

// Spherical chamber coweights on the closure of the chamber cut out by X.
std::vector<Coweight> chamber_coweights(const AffineData& a,
                                        const std::vector<std::vector<std::int64_t>>& X);

}  // namespace mvkit
