#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvkit/biconvex.hpp"

namespace mvkit {

using Partition = std::vector<std::int64_t>;  // weakly decreasing, positive parts

std::int64_t partition_size(const Partition& p);
bool is_partition(const Partition& p);
// All partitions of n, largest first part first.
std::vector<Partition> partitions_of(std::int64_t n);
// Jordan-type style notation, e.g. "(4,2,1^7)".
std::string partition_to_string(const Partition& p);

struct LusztigDatum {
  ConvexOrderSlice order;
  std::vector<std::int64_t> real;                         // aligned with order.roots
  std::vector<std::pair<Coweight, Partition>> imaginary;  // chamber coweights in a fixed order
};

// Keys of the imaginary part for a slice: Gamma intersected with the closed chamber above delta.
std::vector<Coweight> imaginary_keys(const RootContext& ctx, const ConvexOrderSlice& o);

LusztigDatum zero_datum(const RootContext& ctx, const ConvexOrderSlice& o);
void check_datum(const RootContext& ctx, const LusztigDatum& d);

RootVector weight_of(const RootContext& ctx, const LusztigDatum& d);
std::int64_t real_multiplicity(const LusztigDatum& d, const RootVector& root);

std::vector<LusztigDatum> enumerate_by_weight(const RootContext& ctx, const RootVector& nu,
                                              const ConvexOrderSlice& o);

// Coefficient of t^nu in prod over positive roots of (1 - t^alpha)^(-mult alpha).
mpz_class kostant_count(const RootContext& ctx, const RootVector& nu);

struct Triple {
  std::int64_t p, q, r;
  bool operator==(const Triple&) const = default;
};
Triple transition_braid(std::int64_t p, std::int64_t q, std::int64_t r);
std::pair<std::int64_t, std::int64_t> transition_commute(std::int64_t p, std::int64_t q);

// Applies one order move to the datum.
LusztigDatum apply_move(const RootContext& ctx, const LusztigDatum& d, const OrderMove& m);

// Shortest sequence of moves from one slice to another; empty optional if unreachable.
std::optional<std::vector<std::size_t>> move_path(const RootContext& ctx, const ConvexOrderSlice& from,
                                                  const ConvexOrderSlice& to,
                                                  std::size_t cap = 200000);

LusztigDatum reorder(const RootContext& ctx, const LusztigDatum& d, const ConvexOrderSlice& target);

enum class CrystalOp { e, f };

std::int64_t phi_head(const RootContext& ctx, const LusztigDatum& d);
std::int64_t epsilon_head(const RootContext& ctx, const LusztigDatum& d);
std::optional<LusztigDatum> crystal_op_head(const RootContext& ctx, const LusztigDatum& d, CrystalOp op);

// Moves alpha_i to the head (without crossing the imaginary wall), applies the operator,
// and moves back to the original order.
std::optional<LusztigDatum> crystal_op(const RootContext& ctx, const LusztigDatum& d, int i, CrystalOp op);

LusztigDatum star_dual(const RootContext& ctx, const LusztigDatum& d);

}  // namespace mvkit
