#include "mvkit/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>

#ifndef MVKIT_FIXTURE_DIR
#define MVKIT_FIXTURE_DIR "fixtures"
#endif

namespace mvkit {

namespace {

Error schema(const std::string& ptr, const std::string& msg) {
  return Error("schema: " + (ptr.empty() ? std::string("/") : ptr) + ": " + msg, ErrorKind::validation);
}

const json& need(const json& j, const std::string& key, const std::string& ptr) {
  if (!j.is_object() || !j.contains(key)) throw schema(ptr + "/" + key, "missing");
  return j.at(key);
}

std::int64_t int_from_json(const json& j, const std::string& ptr) {
  if (!j.is_number_integer()) throw schema(ptr, "expected an integer");
  return j.get<std::int64_t>();
}

int find_node(const CartanDatum& d, const std::string& label) {
  auto it = std::find(d.labels.begin(), d.labels.end(), label);
  return it == d.labels.end() ? -1 : static_cast<int>(it - d.labels.begin());
}

int node_from_json(const CartanDatum& d, const json& j, const std::string& ptr) {
  std::string label = j.is_string() ? j.get<std::string>() : j.is_number_integer() ? std::to_string(j.get<int>()) : "";
  int i = find_node(d, label);
  if (i < 0) throw schema(ptr, "unknown node " + j.dump());
  return i;
}

Word word_from_json(const CartanDatum& d, const json& j, const std::string& ptr) {
  if (!j.is_array()) throw schema(ptr, "expected an array of node labels");
  Word w;
  for (std::size_t k = 0; k < j.size(); ++k) w.push_back(node_from_json(d, j[k], ptr + "/" + std::to_string(k)));
  return w;
}

json word_to_json(const CartanDatum& d, const Word& w) {
  json a = json::array();
  for (int i : w) a.push_back(d.labels[i]);
  return a;
}

json root_to_json(const RootContext& ctx, const RootVector& r) {
  if (ctx.is_delta(r)) return "delta";
  return json(r);
}

}  // namespace

json rational_to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

Rational rational_from_json(const json& j, const std::string& ptr) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      throw schema(ptr, e.what());
    }
  }
  throw schema(ptr, "expected an integer or a rational string");
}

json datum_to_json(const CartanDatum& d) {
  json j;
  j["labels"] = d.labels;
  json e = json::array();
  for (auto [a, b] : d.edges) e.push_back({d.labels[a], d.labels[b]});
  j["edges"] = e;
  return j;
}

DatumPtr datum_from_json(const json& j, const std::string& ptr) {
  if (j.is_string()) return datum_from_type(j.get<std::string>());
  if (!j.is_object()) throw schema(ptr, "expected a type name or an object");
  if (j.contains("type")) {
    if (!j["type"].is_string()) throw schema(ptr + "/type", "expected a string");
    return datum_from_type(j["type"].get<std::string>());
  }
  // {labels, edges} or the graph form {nodes, edges, kind_hint}
  const std::string lkey = j.contains("nodes") ? "nodes" : "labels";
  const json& labels = need(j, lkey, ptr);
  const json& edges = need(j, "edges", ptr);
  if (!labels.is_array()) throw schema(ptr + "/" + lkey, "expected an array");
  if (!edges.is_array()) throw schema(ptr + "/edges", "expected an array");
  auto label_of = [](const json& x) {
    if (x.is_string()) return x.get<std::string>();
    if (x.is_number_integer()) return std::to_string(x.get<std::int64_t>());
    return std::string();
  };
  std::vector<std::string> names;
  bool numeric = true;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    names.push_back(label_of(labels[k]));
    if (names.back().empty()) throw schema(ptr + "/" + lkey + "/" + std::to_string(k), "expected a node label");
    if (std::count(names.begin(), names.end(), names.back()) > 1)
      throw schema(ptr + "/" + lkey + "/" + std::to_string(k), "duplicate node " + names.back());
    numeric = numeric && names.back().find_first_not_of("0123456789") == std::string::npos;
  }
  auto index = [&](const json& x, const std::string& p) {
    auto it = std::find(names.begin(), names.end(), label_of(x));
    if (label_of(x).empty() || it == names.end()) throw schema(p, "unknown node " + x.dump());
    return static_cast<int>(it - names.begin());
  };
  std::vector<std::pair<int, int>> es;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    std::string p = ptr + "/edges/" + std::to_string(k);
    if (!edges[k].is_array() || edges[k].size() != 2) throw schema(p, "expected a pair of labels");
    es.emplace_back(index(edges[k][0], p + "/0"), index(edges[k][1], p + "/1"));
  }
  std::optional<Kind> hint;
  if (j.contains("kind_hint")) {
    const json& h = j["kind_hint"];
    if (h == "finite") hint = Kind::finite;
    else if (h == "affine") hint = Kind::affine;
    else if (h == "other") hint = Kind::other;
    else throw schema(ptr + "/kind_hint", "expected \"finite\", \"affine\" or \"other\"");
  }
  return make_datum(names, es, numeric, hint);
}

json coweight_to_json(const Coweight& c) {
  json a = json::array();
  for (auto& x : c) a.push_back(rational_to_json(x));
  return a;
}

Coweight coweight_from_json(const CartanDatum& d, const json& j, const std::string& ptr) {
  if (!j.is_array() || static_cast<int>(j.size()) != d.rank())
    throw schema(ptr, "expected " + std::to_string(d.rank()) + " values");
  Coweight c;
  for (std::size_t k = 0; k < j.size(); ++k) c.push_back(rational_from_json(j[k], ptr + "/" + std::to_string(k)));
  return c;
}

RootVector root_from_json(const CartanDatum& d, const json& j, const std::string& ptr) {
  if (!j.is_array() || static_cast<int>(j.size()) != d.rank())
    throw schema(ptr, "expected " + std::to_string(d.rank()) + " integers");
  RootVector r;
  for (std::size_t k = 0; k < j.size(); ++k) r.push_back(int_from_json(j[k], ptr + "/" + std::to_string(k)));
  return r;
}

json slice_to_json(const RootContext& ctx, const ConvexOrderSlice& o) {
  json j;
  j["height"] = o.H;
  json roots = json::array();
  for (auto& r : o.roots) roots.push_back(root_to_json(ctx, r));
  j["roots"] = roots;
  if (o.theta) j["theta"] = coweight_to_json(*o.theta);
  return j;
}

ConvexOrderSlice slice_from_json(const RootContext& ctx, const json& j, const std::string& ptr) {
  const CartanDatum& d = *ctx.datum;
  if (j.is_array()) {
    // bare list of roots; the height bound is the largest root height
    std::int64_t H = 0;
    for (std::size_t k = 0; k < j.size(); ++k) {
      std::string p = ptr + "/" + std::to_string(k);
      H = std::max(H, j[k] == "delta" && ctx.affine ? height(ctx.affine->delta) : height(root_from_json(d, j[k], p)));
    }
    return slice_from_json(ctx, json{{"height", H}, {"roots", j}}, ptr);
  }
  if (!j.is_object()) throw schema(ptr, "expected an object or an array of roots");
  if (j.contains("word")) return order_from_word(ctx, word_from_json(d, j["word"], ptr + "/word"));
  if (j.contains("coweight")) {
    auto theta = coweight_from_json(d, j["coweight"], ptr + "/coweight");
    return order_from_coweight(ctx, theta, int_from_json(need(j, "height", ptr), ptr + "/height"));
  }
  ConvexOrderSlice o;
  o.H = int_from_json(need(j, "height", ptr), ptr + "/height");
  const json& roots = need(j, "roots", ptr);
  if (!roots.is_array()) throw schema(ptr + "/roots", "expected an array");
  for (std::size_t k = 0; k < roots.size(); ++k) {
    std::string p = ptr + "/roots/" + std::to_string(k);
    if (roots[k].is_string() && roots[k].get<std::string>() == "delta") {
      if (!ctx.affine) throw schema(p, "delta in a finite datum");
      o.roots.push_back(ctx.affine->delta);
    } else {
      o.roots.push_back(root_from_json(d, roots[k], p));
    }
  }
  if (j.contains("theta")) o.theta = coweight_from_json(d, j["theta"], ptr + "/theta");
  std::string why;
  if (!validate_convex_order(ctx, o, &why)) throw Error(ptr + ": invalid slice: " + why, ErrorKind::validation);
  return o;
}

json partitions_to_json(const std::vector<std::pair<Coweight, Partition>>& p) {
  json a = json::array();
  for (auto& [g, parts] : p) a.push_back({coweight_to_json(g), parts});
  return a;
}

std::vector<std::pair<Coweight, Partition>> partitions_from_json(const CartanDatum& d, const json& j,
                                                                 const std::string& ptr) {
  if (!j.is_array()) throw schema(ptr, "expected an array of [coweight, parts] pairs");
  std::vector<std::pair<Coweight, Partition>> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    std::string p = ptr + "/" + std::to_string(k);
    if (!j[k].is_array() || j[k].size() != 2) throw schema(p, "expected [coweight, parts]");
    Coweight g = coweight_from_json(d, j[k][0], p + "/0");
    Partition parts;
    if (!j[k][1].is_array()) throw schema(p + "/1", "expected an array of parts");
    for (std::size_t t = 0; t < j[k][1].size(); ++t)
      parts.push_back(int_from_json(j[k][1][t], p + "/1/" + std::to_string(t)));
    std::sort(parts.rbegin(), parts.rend());
    if (!is_partition(parts)) throw schema(p + "/1", "parts must be positive");
    out.emplace_back(g, parts);
  }
  return out;
}

json lusztig_to_json(const RootContext& ctx, const LusztigDatum& d) {
  json j;
  j["order"] = slice_to_json(ctx, d.order);
  json real = json::array();
  for (std::size_t k = 0; k < d.real.size(); ++k)
    if (d.real[k] != 0) real.push_back({root_to_json(ctx, d.order.roots[k]), d.real[k]});
  j["real"] = real;
  j["imaginary"] = partitions_to_json(d.imaginary);
  return j;
}

LusztigDatum lusztig_from_json(const RootContext& ctx, const json& j, const std::string& ptr) {
  const CartanDatum& dat = *ctx.datum;
  LusztigDatum d = zero_datum(ctx, slice_from_json(ctx, need(j, "order", ptr), ptr + "/order"));
  if (j.contains("real")) {
    const json& real = j["real"];
    if (!real.is_array()) throw schema(ptr + "/real", "expected an array");
    // aligned integers, or sparse [root, n] pairs / {root, n} objects
    bool sparse = !real.empty() && !real[0].is_number();
    if (!sparse && real.size() != d.real.size())
      throw schema(ptr + "/real", "expected " + std::to_string(d.real.size()) + " multiplicities");
    for (std::size_t k = 0; k < real.size(); ++k) {
      std::string p = ptr + "/real/" + std::to_string(k);
      if (!sparse) {
        d.real[k] = int_from_json(real[k], p);
        continue;
      }
      const bool pair_form = real[k].is_array();
      if (pair_form && real[k].size() != 2) throw schema(p, "expected [root, n]");
      const json& rj = pair_form ? real[k][0] : need(real[k], "root", p);
      const json& nj = pair_form ? real[k][1] : need(real[k], "n", p);
      const std::string rp = p + (pair_form ? "/0" : "/root"), np = p + (pair_form ? "/1" : "/n");
      RootVector r = root_from_json(dat, rj, rp);
      auto pos = d.order.position(r);
      if (!pos) throw schema(rp, "root is not in the slice");
      d.real[*pos] = int_from_json(nj, np);
    }
  }
  if (j.contains("imaginary")) {
    auto given = partitions_from_json(dat, j["imaginary"], ptr + "/imaginary");
    for (std::size_t k = 0; k < given.size(); ++k) {
      bool found = false;
      for (auto& [g, parts] : d.imaginary)
        if (g == given[k].first) {
          parts = given[k].second;
          found = true;
        }
      if (!found)
        throw schema(ptr + "/imaginary/" + std::to_string(k), "coweight is not a chamber coweight of the slice");
    }
  }
  check_datum(ctx, d);
  return d;
}

json polytope_to_json(const GGMSPolytope& P) {
  const CartanDatum& d = *P.ctx->datum;
  json j;
  j["weight"] = P.weight;
  j["L"] = P.L;
  json v = json::array();
  for (auto& [w, x] : P.tits) v.push_back({{"side", "tits"}, {"word", word_to_json(d, w)}, {"coords", x}});
  for (auto& [w, x] : P.anti) v.push_back({{"side", "anti"}, {"word", word_to_json(d, w)}, {"coords", x}});
  j["vertices"] = v;
  j["partitions"] = partitions_to_json(P.partitions);
  if (P.partial) {
    j["partial"] = true;
    j["path"] = P.path;
  }
  return j;
}

GGMSPolytope polytope_from_json(ContextPtr ctx, const json& j, const std::string& ptr) {
  const DatumPtr& d = ctx->datum;
  std::vector<std::pair<Coweight, Partition>> parts;
  if (j.contains("partitions")) parts = partitions_from_json(*d, j["partitions"], ptr + "/partitions");
  std::optional<int> L;
  if (j.contains("L")) L = static_cast<int>(int_from_json(j["L"], ptr + "/L"));
  if (j.contains("points")) {
    const json& pts = j["points"];
    if (!pts.is_array() || pts.empty()) throw schema(ptr + "/points", "expected a nonempty array");
    std::vector<RootVector> v;
    for (std::size_t k = 0; k < pts.size(); ++k) v.push_back(root_from_json(*d, pts[k], ptr + "/points/" + std::to_string(k)));
    auto P = polytope_from_vertices(ctx, v, parts, L);
    if (j.contains("weight") && root_from_json(*d, j["weight"], ptr + "/weight") != P.weight)
      throw schema(ptr + "/weight", "does not match the top vertex");
    return P;
  }
  const json& verts = need(j, "vertices", ptr);
  if (!verts.is_array()) throw schema(ptr + "/vertices", "expected an array");
  GGMSPolytope P;
  P.ctx = ctx;
  P.partitions = parts;
  int maxlen = 0;
  for (std::size_t k = 0; k < verts.size(); ++k) {
    std::string p = ptr + "/vertices/" + std::to_string(k);
    const json& side = need(verts[k], "side", p);
    Word w = WeylElt::from_word(d, word_from_json(*d, need(verts[k], "word", p), p + "/word")).word();
    RootVector x = root_from_json(*d, need(verts[k], "coords", p), p + "/coords");
    maxlen = std::max(maxlen, static_cast<int>(w.size()));
    if (side == "tits") P.tits[w] = x;
    else if (side == "anti") P.anti[w] = x;
    else throw schema(p + "/side", "expected \"tits\" or \"anti\"");
  }
  P.L = L ? *L : maxlen;
  P.weight = j.contains("weight") ? root_from_json(*d, j["weight"], ptr + "/weight")
                                  : (P.tits.count(Word{}) ? P.tits[Word{}] : RootVector(d->rank(), 0));
  if (j.contains("partial") && j["partial"].is_boolean()) P.partial = j["partial"].get<bool>();
  if (j.contains("path")) {
    for (std::size_t k = 0; k < j["path"].size(); ++k)
      P.path.push_back(root_from_json(*d, j["path"][k], ptr + "/path/" + std::to_string(k)));
  }
  collect_vertices(P);
  if (P.partial) {
    std::vector<RootVector> v = P.vertices;
    v.insert(v.end(), P.path.begin(), P.path.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    P.vertices = v;
  }
  return P;
}

json module_to_json(const RatModule& m) {
  const CartanDatum& d = *m.datum;
  json j;
  json o = json::array();
  for (auto [s, t] : m.orientation) o.push_back({d.labels[s], d.labels[t]});
  j["orientation"] = o;
  json dims = json::object();
  for (int i = 0; i < d.rank(); ++i) dims[d.labels[i]] = m.dims[i];
  j["dims"] = dims;
  json arrows = json::object();
  for (std::size_t a = 0; a < m.arrows.size(); ++a) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.arrows[a].rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.arrows[a].cols(); ++c) row.push_back(rational_to_json(m.arrows[a](r, c)));
      rows.push_back(row);
    }
    arrows[m.arrow_id(a)] = rows;
  }
  j["arrows"] = arrows;
  return j;
}

RatModule module_from_json(DatumPtr d, const json& j, const std::string& ptr) {
  std::vector<std::pair<int, int>> orientation = d->edges;
  if (j.contains("orientation")) {
    const json& o = j["orientation"];
    if (!o.is_array()) throw schema(ptr + "/orientation", "expected an array");
    orientation.clear();
    for (std::size_t k = 0; k < o.size(); ++k) {
      std::string p = ptr + "/orientation/" + std::to_string(k);
      if (!o[k].is_array() || o[k].size() != 2) throw schema(p, "expected [src, dst]");
      orientation.emplace_back(node_from_json(*d, o[k][0], p + "/0"), node_from_json(*d, o[k][1], p + "/1"));
    }
  }
  RatModule m;
  try {
    m = zero_module<Rational>(d, orientation);
  } catch (const Error& e) {
    throw schema(ptr + "/orientation", e.what());
  }
  const json& dims = need(j, "dims", ptr);
  if (!dims.is_object()) throw schema(ptr + "/dims", "expected an object keyed by node label");
  for (auto it = dims.begin(); it != dims.end(); ++it) {
    int i = find_node(*d, it.key());
    if (i < 0) throw schema(ptr + "/dims/" + it.key(), "unknown node");
    std::int64_t v = int_from_json(it.value(), ptr + "/dims/" + it.key());
    if (v < 0) throw schema(ptr + "/dims/" + it.key(), "negative dimension");
    m.dims[i] = static_cast<int>(v);
  }
  reshape_arrows(m);
  const json& arrows = need(j, "arrows", ptr);
  if (!arrows.is_object()) throw schema(ptr + "/arrows", "expected an object keyed by arrow id");
  for (auto it = arrows.begin(); it != arrows.end(); ++it) {
    std::string p = ptr + "/arrows/" + it.key();
    std::size_t a = m.arrows.size();
    for (std::size_t b = 0; b < m.arrows.size(); ++b)
      if (m.arrow_id(b) == it.key()) a = b;
    if (a == m.arrows.size()) throw schema(p, "unknown arrow id (expected a<k> or a<k>*)");
    auto& M = m.arrows[a];
    const json& rows = it.value();
    if (!rows.is_array() || rows.size() != M.rows())
      throw schema(p, "expected " + std::to_string(M.rows()) + " rows");
    for (std::size_t r = 0; r < M.rows(); ++r) {
      if (!rows[r].is_array() || rows[r].size() != M.cols())
        throw schema(p + "/" + std::to_string(r), "expected " + std::to_string(M.cols()) + " entries");
      for (std::size_t c = 0; c < M.cols(); ++c)
        M(r, c) = rational_from_json(rows[r][c], p + "/" + std::to_string(r) + "/" + std::to_string(c));
    }
  }
  return m;
}

std::vector<std::string> schema_violations(const json& j) {
  std::vector<std::string> out;
  auto bad = [&](const std::string& p, const std::string& m) { out.push_back(p + ": " + m); };
  if (!j.is_object()) {
    bad("/", "expected an object");
    return out;
  }
  std::string kind;
  if (!j.contains("kind") || !j["kind"].is_string()) bad("/kind", "missing or not a string");
  else kind = j["kind"].get<std::string>();
  static const std::set<std::string> kinds{"datum", "lusztig", "polytope", "module"};
  if (!kind.empty() && !kinds.count(kind)) bad("/kind", "unknown kind \"" + kind + "\"");
  if (j.contains("name") && !j["name"].is_string()) bad("/name", "expected a string");
  if (!j.contains("datum")) bad("/datum", "missing");
  else {
    const json& d = j["datum"];
    if (!d.is_string() && !(d.is_object() && (d.contains("type") || ((d.contains("labels") || d.contains("nodes")) && d.contains("edges")))))
      bad("/datum", "expected a type name, {labels, edges} or {nodes, edges}");
  }
  if (kind == "lusztig") {
    if (!j.contains("order") || !j["order"].is_object()) bad("/order", "missing or not an object");
    if (j.contains("real") && !j["real"].is_array()) bad("/real", "expected an array");
    if (j.contains("imaginary") && !j["imaginary"].is_array()) bad("/imaginary", "expected an array");
  } else if (kind == "polytope") {
    if (!j.contains("vertices") && !j.contains("points")) bad("/vertices", "missing (or give /points)");
    if (j.contains("vertices") && !j["vertices"].is_array()) bad("/vertices", "expected an array");
    if (j.contains("points") && !j["points"].is_array()) bad("/points", "expected an array");
    if (j.contains("partitions") && !j["partitions"].is_array()) bad("/partitions", "expected an array");
  } else if (kind == "module") {
    if (j.contains("orientation") && !j["orientation"].is_array()) bad("/orientation", "expected an array");
    if (!j.contains("dims") || !j["dims"].is_object()) bad("/dims", "missing or not an object");
    if (!j.contains("arrows") || !j["arrows"].is_object()) bad("/arrows", "missing or not an object");
  }
  return out;
}

Fixture fixture_from_json(const json& j) {
  auto v = schema_violations(j);
  if (!v.empty()) {
    std::string msg = "schema violations:";
    for (auto& s : v) msg += "\n  " + s;
    throw Error(msg, ErrorKind::validation);
  }
  Fixture f;
  f.name = j.value("name", "");
  f.kind = j["kind"].get<std::string>();
  f.datum = datum_from_json(j["datum"], "/datum");
  if (f.datum->kind == Kind::affine && j.contains("extending")) {
    int e = node_from_json(*f.datum, j["extending"], "/extending");
    f.ctx = std::make_shared<RootContext>(f.datum, affine_data(f.datum, e));
  } else if (f.datum->kind != Kind::other) {
    f.ctx = std::make_shared<RootContext>(f.datum);
  }
  auto need_ctx = [&]() {
    if (!f.ctx) throw schema("/datum", "datum must be of finite or affine type");
  };
  if (f.kind == "lusztig") {
    need_ctx();
    f.lusztig = lusztig_from_json(*f.ctx, j);
  } else if (f.kind == "polytope") {
    need_ctx();
    f.polytope = polytope_from_json(f.ctx, j);
  } else if (f.kind == "module") {
    f.module = module_from_json(f.datum, j);
  }
  return f;
}

json fixture_to_json(const Fixture& f) {
  json j;
  if (!f.name.empty()) j["name"] = f.name;
  j["kind"] = f.kind;
  j["datum"] = datum_to_json(*f.datum);
  if (f.ctx && f.ctx->affine && f.ctx->affine->extending != default_affine_data(f.datum).extending)
    j["extending"] = f.datum->labels[f.ctx->affine->extending];
  json payload;
  if (f.lusztig) payload = lusztig_to_json(*f.ctx, *f.lusztig);
  if (f.polytope) payload = polytope_to_json(*f.polytope);
  if (f.module) payload = module_to_json(*f.module);
  for (auto it = payload.begin(); it != payload.end(); ++it) j[it.key()] = it.value();
  return j;
}

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path, ErrorKind::usage);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(path + ": " + e.what(), ErrorKind::validation);
  }
  return fixture_from_json(j);
}

std::string fixture_dir() {
  if (const char* env = std::getenv("MVKIT_FIXTURES"); env && *env) return env;
  return MVKIT_FIXTURE_DIR;
}

std::string fixture_path(const std::string& name) { return fixture_dir() + "/" + name; }

}  // namespace mvkit
