#include "mvkit/lusztig.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>

namespace mvkit {

std::int64_t partition_size(const Partition& p) {
  std::int64_t s = 0;
  for (auto x : p) s += x;
  return s;
}

bool is_partition(const Partition& p) {
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] <= 0) return false;
    if (k && p[k] > p[k - 1]) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(std::int64_t n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t rest, std::int64_t maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::string partition_to_string(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < p.size();) {
    std::size_t e = k;
    while (e < p.size() && p[e] == p[k]) ++e;
    if (k) os << ',';
    os << p[k];
    if (e - k > 2) os << '^' << (e - k);
    else if (e - k == 2) os << ',' << p[k];
    k = e;
  }
  os << ')';
  return os.str();
}

std::vector<Coweight> imaginary_keys(const RootContext& ctx, const ConvexOrderSlice& o) {
  if (!ctx.affine) return {};
  return chamber_coweights(*ctx.affine, positive_system_above_delta(ctx, o));
}

LusztigDatum zero_datum(const RootContext& ctx, const ConvexOrderSlice& o) {
  LusztigDatum d;
  d.order = o;
  d.real.assign(o.roots.size(), 0);
  for (auto& g : imaginary_keys(ctx, o)) d.imaginary.emplace_back(g, Partition{});
  return d;
}

void check_datum(const RootContext& ctx, const LusztigDatum& d) {
  if (d.real.size() != d.order.roots.size())
    throw Error("Lusztig datum: real part does not match the slice", ErrorKind::validation);
  for (std::size_t k = 0; k < d.real.size(); ++k) {
    if (d.real[k] < 0) throw Error("Lusztig datum: negative multiplicity", ErrorKind::validation);
    if (ctx.is_delta(d.order.roots[k]) && d.real[k] != 0)
      throw Error("Lusztig datum: delta carries partitions, not a multiplicity", ErrorKind::validation);
  }
  auto keys = imaginary_keys(ctx, d.order);
  if (keys.size() != d.imaginary.size())
    throw Error("Lusztig datum: imaginary part must be indexed by the chamber coweights",
                ErrorKind::validation);
  for (std::size_t k = 0; k < keys.size(); ++k) {
    if (keys[k] != d.imaginary[k].first)
      throw Error("Lusztig datum: unexpected coweight " + to_string(d.imaginary[k].first),
                  ErrorKind::validation);
    if (!is_partition(d.imaginary[k].second))
      throw Error("Lusztig datum: not a partition", ErrorKind::validation);
  }
  if (ctx.affine && height(weight_of(ctx, d)) > d.order.H)
    throw Error("Lusztig datum: weight exceeds the slice height", ErrorKind::validation);
}

RootVector weight_of(const RootContext& ctx, const LusztigDatum& d) {
  RootVector w(ctx.datum->rank(), 0);
  for (std::size_t k = 0; k < d.real.size(); ++k)
    if (d.real[k]) w = add(w, scale(d.order.roots[k], d.real[k]));
  std::int64_t im = 0;
  for (auto& [g, p] : d.imaginary) im += partition_size(p);
  if (im) w = add(w, scale(ctx.affine->delta, im));
  return w;
}

std::int64_t real_multiplicity(const LusztigDatum& d, const RootVector& root) {
  auto p = d.order.position(root);
  return p ? d.real[*p] : 0;
}

namespace {

// Tuples of partitions over `slots` keys with total size n.
void partition_tuples(std::size_t slots, std::int64_t n, std::vector<std::vector<Partition>>& out) {
  std::vector<Partition> cur(slots);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t rest) {
    if (k + 1 == slots) {
      for (auto& p : partitions_of(rest)) {
        cur[k] = p;
        out.push_back(cur);
      }
      return;
    }
    for (std::int64_t s = 0; s <= rest; ++s)
      for (auto& p : partitions_of(s)) {
        cur[k] = p;
        rec(k + 1, rest - s);
      }
  };
  if (slots == 0) {
    if (n == 0) out.emplace_back();
    return;
  }
  rec(0, n);
}

}  // namespace

std::vector<LusztigDatum> enumerate_by_weight(const RootContext& ctx, const RootVector& nu,
                                              const ConvexOrderSlice& o) {
  if (!is_nonnegative(nu)) throw Error("weight must be nonnegative", ErrorKind::usage);
  if (ctx.affine && height(nu) > o.H)
    throw Error("slice height " + std::to_string(o.H) + " is too small for the weight", ErrorKind::usage);
  LusztigDatum base = zero_datum(ctx, o);
  std::vector<LusztigDatum> out;
  const std::size_t n = o.roots.size();
  std::vector<std::int64_t> cur(n, 0);
  RootVector rest = nu;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) {
      std::int64_t m = 0;
      if (ctx.affine) {
        const auto& dl = ctx.affine->delta;
        m = rest[0] / dl[0];
        if (rest != scale(dl, m)) return;
      } else if (!is_zero(rest)) {
        return;
      }
      std::vector<std::vector<Partition>> tuples;
      partition_tuples(base.imaginary.size(), m, tuples);
      for (auto& t : tuples) {
        LusztigDatum d = base;
        d.real = cur;
        for (std::size_t s = 0; s < t.size(); ++s) d.imaginary[s].second = t[s];
        out.push_back(std::move(d));
      }
      return;
    }
    const RootVector& b = o.roots[k];
    if (ctx.is_delta(b)) {
      rec(k + 1);
      return;
    }
    std::int64_t maxn = INT64_MAX;
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] > 0) maxn = std::min(maxn, rest[i] / b[i]);
    for (std::int64_t c = 0; c <= maxn; ++c) {
      cur[k] = c;
      rec(k + 1);
      for (std::size_t i = 0; i < b.size(); ++i) rest[i] -= b[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) rest[i] += b[i] * (maxn + 1);
    cur[k] = 0;
  };
  rec(0);
  return out;
}

mpz_class kostant_count(const RootContext& ctx, const RootVector& nu) {
  const int n = ctx.datum->rank();
  if (static_cast<int>(nu.size()) != n) throw Error("weight dimension mismatch", ErrorKind::usage);
  if (!is_nonnegative(nu)) return 0;
  std::vector<std::int64_t> stride(n, 1);
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    stride[i] = total;
    total *= nu[i] + 1;
  }
  std::vector<mpz_class> f(total, 0);
  f[0] = 1;
  auto le = [&](const RootVector& b) {
    for (int i = 0; i < n; ++i)
      if (b[i] > nu[i]) return false;
    return true;
  };
  std::vector<std::pair<RootVector, int>> parts;
  for (const auto& b : ctx.E_full(height(nu))) {
    if (!le(b)) continue;
    parts.emplace_back(b, ctx.is_imaginary(b) ? ctx.affine->r : 1);
  }
  for (auto& [b, mult] : parts) {
    std::int64_t off = 0;
    for (int i = 0; i < n; ++i) off += b[i] * stride[i];
    for (int rep = 0; rep < mult; ++rep) {
      for (std::int64_t idx = 0; idx < total; ++idx) {
        // decode and test that idx - b stays in the box
        std::int64_t t = idx;
        bool ok = true;
        for (int i = n - 1; i >= 0; --i) {
          std::int64_t c = t / stride[i];
          t -= c * stride[i];
          if (c < b[i]) ok = false;
        }
        if (ok) f[idx] += f[idx - off];
      }
    }
  }
  return f[total - 1];
}

Triple transition_braid(std::int64_t p, std::int64_t q, std::int64_t r) {
  std::int64_t m = std::min(p, r);
  return {q + r - m, m, p + q - m};
}

std::pair<std::int64_t, std::int64_t> transition_commute(std::int64_t p, std::int64_t q) { return {q, p}; }

LusztigDatum apply_move(const RootContext&, const LusztigDatum& d, const OrderMove& m) {
  LusztigDatum out = d;
  out.order = m.slice;
  const std::size_t p = m.position;
  if (m.label == "commutation") {
    auto [a, b] = transition_commute(d.real[p], d.real[p + 1]);
    out.real[p] = a;
    out.real[p + 1] = b;
  } else {
    Triple t = transition_braid(d.real[p], d.real[p + 1], d.real[p + 2]);
    out.real[p] = t.p;
    out.real[p + 1] = t.q;
    out.real[p + 2] = t.r;
  }
  return out;
}

namespace {

std::optional<std::vector<std::size_t>> search(const RootContext& ctx, const ConvexOrderSlice& from,
                                               const std::function<bool(const ConvexOrderSlice&)>& goal,
                                               std::size_t cap) {
  using Key = std::vector<RootVector>;
  std::map<Key, std::pair<Key, std::size_t>> parent;
  std::deque<ConvexOrderSlice> queue{from};
  parent[from.roots] = {Key{}, SIZE_MAX};
  while (!queue.empty()) {
    ConvexOrderSlice cur = queue.front();
    queue.pop_front();
    if (goal(cur)) {
      std::vector<std::size_t> path;
      Key k = cur.roots;
      while (parent[k].second != SIZE_MAX) {
        path.push_back(parent[k].second);
        k = parent[k].first;
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (auto& m : order_moves(ctx, cur)) {
      if (parent.count(m.slice.roots)) continue;
      if (parent.size() >= cap) throw Error("move search exceeded its state cap");
      parent[m.slice.roots] = {cur.roots, m.position};
      queue.push_back(m.slice);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<std::size_t>> move_path(const RootContext& ctx, const ConvexOrderSlice& from,
                                                  const ConvexOrderSlice& to, std::size_t cap) {
  return search(ctx, from, [&](const ConvexOrderSlice& s) { return s.roots == to.roots; }, cap);
}

namespace {

LusztigDatum follow(const RootContext& ctx, LusztigDatum d, const std::vector<std::size_t>& path) {
  for (auto p : path) d = apply_move(ctx, d, order_move(ctx, d.order, p));
  return d;
}

void require_same_side(const RootContext& ctx, const ConvexOrderSlice& a, const ConvexOrderSlice& b) {
  if (!ctx.affine) return;
  if (positive_system_above_delta(ctx, a) != positive_system_above_delta(ctx, b))
    throw Error("reorder: the target slice lies across the imaginary wall; the exchange rule for that "
                "2-face is not available");
}

}  // namespace

LusztigDatum reorder(const RootContext& ctx, const LusztigDatum& d, const ConvexOrderSlice& target) {
  if (d.order.H != target.H) throw Error("reorder: slices have different height bounds", ErrorKind::usage);
  require_same_side(ctx, d.order, target);
  auto path = move_path(ctx, d.order, target);
  if (!path) throw Error("reorder: target slice is not reachable by commutation and A2 braid moves");
  LusztigDatum out = follow(ctx, d, *path);
  out.order = target;
  return out;
}

namespace {
int head_simple(const RootContext& ctx, const LusztigDatum& d) {
  if (d.order.roots.empty()) throw Error("empty slice");
  const RootVector& h = d.order.roots.front();
  for (int i = 0; i < ctx.datum->rank(); ++i)
    if (h == unit_vector(ctx.datum->rank(), i)) return i;
  throw Error("crystal operator: the head of the order " + to_string(h) + " is not a simple root",
              ErrorKind::validation);
}
}  // namespace

std::int64_t phi_head(const RootContext& ctx, const LusztigDatum& d) {
  head_simple(ctx, d);
  return d.real.front();
}

std::int64_t epsilon_head(const RootContext& ctx, const LusztigDatum& d) {
  int i = head_simple(ctx, d);
  return d.real.front() -
         bilinear_form(*ctx.datum, unit_vector(ctx.datum->rank(), i), weight_of(ctx, d));
}

std::optional<LusztigDatum> crystal_op_head(const RootContext& ctx, const LusztigDatum& d, CrystalOp op) {
  head_simple(ctx, d);
  LusztigDatum out = d;
  if (op == CrystalOp::e) {
    out.real.front() += 1;
    if (ctx.affine && height(weight_of(ctx, out)) > out.order.H)
      throw Error("crystal operator: result leaves the slice height bound");
    return out;
  }
  if (out.real.front() == 0) return std::nullopt;
  out.real.front() -= 1;
  return out;
}

std::optional<LusztigDatum> crystal_op(const RootContext& ctx, const LusztigDatum& d, int i, CrystalOp op) {
  const RootVector ai = unit_vector(ctx.datum->rank(), i);
  auto path = search(ctx, d.order, [&](const ConvexOrderSlice& s) { return s.roots.front() == ai; }, 200000);
  if (!path)
    throw Error("crystal operator: alpha_" + ctx.datum->labels[i] +
                " cannot be brought to the head without crossing the imaginary wall");
  LusztigDatum at_head = follow(ctx, d, *path);
  auto res = crystal_op_head(ctx, at_head, op);
  if (!res) return std::nullopt;
  return reorder(ctx, *res, d.order);
}

LusztigDatum star_dual(const RootContext& ctx, const LusztigDatum& d) {
  LusztigDatum out;
  out.order = d.order;
  out.order.theta.reset();
  if (d.order.theta) out.order.theta = negate(*d.order.theta);
  std::reverse(out.order.roots.begin(), out.order.roots.end());
  out.real.assign(d.real.rbegin(), d.real.rend());
  for (auto& g : imaginary_keys(ctx, out.order)) {
    Partition p;
    for (auto& [h, q] : d.imaginary)
      if (negate(h) == g) p = q;
    out.imaginary.emplace_back(g, p);
  }
  return out;
}

}  // namespace mvkit
