// mvkit: command-line front end to the library.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mvkit/acceptance.hpp"
#include "mvkit/export.hpp"
#include "mvkit/io.hpp"

using namespace mvkit;

namespace {

struct Options {
  bool json_out = false;
  std::uint64_t seed = 20240601;
  std::string type, weight, order, coweight, word, node, op, format = "json", face, file;
  std::int64_t height = 0;
  std::size_t position = 0;
  int length = -1;
  int criterion = 0;
  bool strict = false, star = false;
};

// Result of one command: human-readable text plus the --json payload.
struct Outcome {
  bool ok = true;
  std::string text;
  json data = json::object();
};

Error usage(const std::string& m) { return Error(m, ErrorKind::usage); }

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

RootVector parse_weight(const CartanDatum& d, const std::string& s) {
  if (s.empty()) throw usage("--weight is required");
  RootVector v;
  for (auto& t : split_list(s)) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(t, &used));
      if (used != t.size()) throw std::invalid_argument(t);
    } catch (const std::exception&) {
      throw usage("bad weight entry '" + t + "'");
    }
  }
  if (static_cast<int>(v.size()) != d.rank())
    throw usage("--weight needs " + std::to_string(d.rank()) + " entries, got " + std::to_string(v.size()));
  return v;
}

Coweight parse_coweight(const CartanDatum& d, const std::string& s) {
  Coweight c;
  for (auto& t : split_list(s)) c.push_back(parse_rational(t));
  if (static_cast<int>(c.size()) != d.rank())
    throw usage("coweight needs " + std::to_string(d.rank()) + " entries, got " + std::to_string(c.size()));
  return c;
}

int parse_node(const CartanDatum& d, const std::string& s) {
  int i = d.index_of(s);
  if (i < 0) throw usage("unknown node '" + s + "'");
  return i;
}

Word parse_word(const CartanDatum& d, const std::string& s) {
  Word w;
  for (auto& t : split_list(s)) w.push_back(parse_node(d, t));
  return w;
}

std::string resolve(const std::string& path) {
  namespace fs = std::filesystem;
  if (path.empty()) throw usage("a fixture file is required");
  if (fs::exists(path)) return path;
  if (auto p = fixture_path(path); fs::exists(p)) return p;
  if (auto p = fixture_path(path + ".json"); fs::exists(p)) return p;
  throw usage("no such file or bundled fixture: " + path);
}

std::shared_ptr<RootContext> context_for(DatumPtr d) {
  if (d->kind == Kind::other) throw usage("datum is neither of finite nor of affine type");
  return std::make_shared<RootContext>(d);
}

DatumPtr datum_arg(const Options& o) {
  if (!o.file.empty()) return load_fixture(resolve(o.file)).datum;
  if (o.type.empty()) throw usage("--type is required");
  if (std::filesystem::exists(o.type)) {
    std::ifstream in(o.type);
    return datum_from_json(json::parse(in), "");
  }
  return datum_from_type(o.type);
}

// Seeded generic coweight order for affine types.
ConvexOrderSlice default_affine_order(const RootContext& ctx, std::int64_t H, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-60, 60);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Coweight theta;
    for (int i = 0; i < ctx.datum->rank(); ++i) theta.push_back(Rational(coord(rng), 7));
    try {
      return order_from_coweight(ctx, theta, H);
    } catch (const Error&) {
    }
  }
  throw Error("no generic coweight found");
}

ConvexOrderSlice order_arg(const RootContext& ctx, const Options& o, std::int64_t H) {
  const CartanDatum& d = *ctx.datum;
  if (o.height > 0) H = o.height;
  if (!o.coweight.empty()) {
    if (ctx.is_affine() && H <= 0) throw usage("--height is required for an affine order");
    return order_from_coweight(ctx, parse_coweight(d, o.coweight), std::max<std::int64_t>(H, 1));
  }
  if (!o.word.empty()) return order_from_word(ctx, parse_word(d, o.word));
  if (o.order.empty()) {
    if (!ctx.is_affine()) return order_from_word(ctx, longest_element(ctx.datum).word());
    if (H <= 0) throw usage("--height is required for an affine order");
    return default_affine_order(ctx, H, o.seed);
  }
  json j;
  const std::string& s = o.order;
  if (s[0] == '{' || s[0] == '[') {
    j = json::parse(s);
  } else if (std::filesystem::exists(s) || std::filesystem::exists(fixture_path(s))) {
    std::ifstream in(resolve(s));
    j = json::parse(in);
    if (j.is_object() && j.contains("order")) j = j["order"];
  } else {
    return order_from_word(ctx, parse_word(d, s));
  }
  return slice_from_json(ctx, j, "/order");
}

std::string datum_text(const LusztigDatum& d) {
  std::string s;
  for (std::size_t k = 0; k < d.real.size(); ++k)
    if (d.real[k]) s += (s.empty() ? "" : " ") + std::to_string(d.real[k]) + "*" + to_string(d.order.roots[k]);
  for (auto& [g, p] : d.imaginary)
    if (!p.empty()) s += (s.empty() ? "" : " ") + std::string("lambda") + to_string(g) + "=" + partition_to_string(p);
  return s.empty() ? "0" : s;
}

std::string slice_text(const RootContext& ctx, const ConvexOrderSlice& o) {
  std::string s;
  for (auto& r : o.roots) s += (s.empty() ? "" : " < ") + (ctx.is_delta(r) ? std::string("delta") : to_string(r));
  return s;
}

json fixture_json(const std::string& kind, ContextPtr ctx) {
  Fixture f;
  f.kind = kind;
  f.datum = ctx->datum;
  f.ctx = ctx;
  return fixture_to_json(f);
}

// ---- roots

Outcome roots_info(const Options& o) {
  auto d = datum_arg(o);
  Outcome out;
  std::ostringstream os;
  os << "kind " << kind_name(d->kind) << ", rank " << d->rank() << "\nnodes";
  for (auto& l : d->labels) os << " " << l;
  os << "\ncartan\n";
  for (auto& row : d->cartan) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "  ") << row[j];
    os << "\n";
  }
  out.data["kind"] = kind_name(d->kind);
  out.data["rank"] = d->rank();
  out.data["datum"] = datum_to_json(*d);
  out.data["cartan"] = d->cartan;
  if (d->kind == Kind::finite) {
    auto roots = finite_positive_roots(*d);
    os << "positive roots " << roots.size() << "\n";
    out.data["positive_roots"] = roots;
  }
  if (d->kind == Kind::affine) {
    auto a = default_affine_data(d);
    auto gamma = spherical_coweights(a);
    os << "delta " << to_string(a.delta) << "\nextending node " << d->labels[a.extending] << "\nGamma ("
       << gamma.size() << "):";
    for (auto& g : gamma) os << " " << to_string(g);
    os << "\n";
    out.data["delta"] = a.delta;
    out.data["extending"] = d->labels[a.extending];
    json gj = json::array();
    for (auto& g : gamma) gj.push_back(coweight_to_json(g));
    out.data["gamma"] = gj;
  }
  out.text = os.str();
  return out;
}

Outcome roots_classify(const Options& o) {
  auto d = datum_arg(o);
  auto nu = parse_weight(*d, o.weight);
  Outcome out;
  auto c = classify_root(*d, nu);
  out.text = root_class_name(c) + "\n";
  out.data["weight"] = nu;
  out.data["class"] = root_class_name(c);
  out.data["norm"] = bilinear_form(*d, nu, nu);
  return out;
}

// ---- weyl

WeylElt element_arg(DatumPtr d, const Options& o) {
  if (!o.word.empty()) return WeylElt::from_word(d, parse_word(*d, o.word));
  if (d->kind != Kind::finite) throw usage("--word is required outside finite type");
  return longest_element(d);
}

Outcome weyl_words(const Options& o) {
  auto d = datum_arg(o);
  auto w = element_arg(d, o);
  auto g = reduced_words(w);
  Outcome out;
  std::ostringstream os;
  json words = json::array();
  for (auto& x : g.words) {
    os << word_to_string(*d, x) << "\n";
    json a = json::array();
    for (int i : x) a.push_back(d->labels[i]);
    words.push_back(a);
  }
  os << g.words.size() << " reduced words of length " << w.length() << "\n";
  out.text = os.str();
  out.data["length"] = w.length();
  out.data["count"] = g.words.size();
  out.data["moves"] = g.moves.size();
  out.data["words"] = words;
  return out;
}

Outcome weyl_inversions(const Options& o) {
  auto d = datum_arg(o);
  if (o.word.empty()) throw usage("--word is required");
  Word word = parse_word(*d, o.word);
  Outcome out;
  if (!is_reduced_word(*d, word)) out.text = "note: word is not reduced; using the element it represents\n";
  auto w = WeylElt::from_word(d, word);
  auto inv = inversion_set(w);
  std::ostringstream os;
  os << "element " << word_to_string(*d, w.word()) << " (length " << w.length() << ")\n";
  for (auto& r : inv) os << to_string(r) << "\n";
  out.text += os.str();
  out.data["word"] = json::array();
  for (int i : w.word()) out.data["word"].push_back(d->labels[i]);
  out.data["reduced_input"] = is_reduced_word(*d, word);
  out.data["inversions"] = inv;
  return out;
}

// ---- order

Outcome order_make(const Options& o) {
  auto ctx = context_for(datum_arg(o));
  auto s = order_arg(*ctx, o, o.height);
  Outcome out;
  out.text = slice_text(*ctx, s) + "\n";
  out.data["order"] = slice_to_json(*ctx, s);
  return out;
}

Outcome order_move_cmd(const Options& o) {
  auto ctx = context_for(datum_arg(o));
  auto s = order_arg(*ctx, o, o.height);
  auto m = order_move(*ctx, s, o.position);
  Outcome out;
  out.text = m.label + " at " + std::to_string(m.position) + "\n" + slice_text(*ctx, m.slice) + "\n";
  out.data["move"] = m.label;
  out.data["position"] = m.position;
  out.data["order"] = slice_to_json(*ctx, m.slice);
  return out;
}

Outcome order_validate(const Options& o) {
  auto ctx = context_for(datum_arg(o));
  Outcome out;
  std::string why;
  try {
    auto s = order_arg(*ctx, o, o.height);
    out.ok = validate_convex_order(*ctx, s, &why);
    out.data["roots"] = s.roots.size();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::usage) throw;
    out.ok = false;
    why = e.what();
  }
  out.text = out.ok ? "pass\n" : "fail: " + why + "\n";
  out.data["valid"] = out.ok;
  if (!out.ok) out.data["reason"] = why;
  return out;
}

// ---- crystal

Outcome crystal_count(const Options& o) {
  auto ctx = context_for(datum_arg(o));
  auto nu = parse_weight(*ctx->datum, o.weight);
  mpz_class k = kostant_count(*ctx, nu);
  Outcome out;
  out.text = k.get_str() + "\n";
  out.data["weight"] = nu;
  out.data["count"] = k.fits_slong_p() ? json(k.get_si()) : json(k.get_str());
  if (!o.order.empty() || !o.coweight.empty() || !o.word.empty()) {
    auto s = order_arg(*ctx, o, height(nu));
    auto n = enumerate_by_weight(*ctx, nu, s).size();
    out.data["enumerated"] = n;
    out.ok = mpz_class(static_cast<unsigned long>(n)) == k;
    if (!out.ok) out.text += "fail: enumeration along the order gives " + std::to_string(n) + "\n";
  }
  return out;
}

Outcome crystal_enum(const Options& o) {
  auto ctx = context_for(datum_arg(o));
  auto nu = parse_weight(*ctx->datum, o.weight);
  auto s = order_arg(*ctx, o, height(nu));
  auto all = enumerate_by_weight(*ctx, nu, s);
  Outcome out;
  std::ostringstream os;
  os << "order " << slice_text(*ctx, s) << "\n";
  json data = json::array();
  for (auto& d : all) {
    os << datum_text(d) << "\n";
    json j = lusztig_to_json(*ctx, d);
    j.erase("order");
    data.push_back(j);
  }
  os << all.size() << " data\n";
  out.text = os.str();
  out.data["order"] = slice_to_json(*ctx, s);
  out.data["count"] = all.size();
  out.data["data"] = data;
  return out;
}

Fixture lusztig_fixture(const Options& o) {
  auto f = load_fixture(resolve(o.file));
  if (!f.lusztig) throw usage(o.file + " is not a Lusztig datum fixture");
  return f;
}

Outcome crystal_op_cmd(const Options& o) {
  auto f = lusztig_fixture(o);
  const RootContext& ctx = *f.ctx;
  if (o.node.empty()) throw usage("--node is required");
  if (o.op != "e" && o.op != "f") throw usage("--op must be e or f");
  int i = parse_node(*f.datum, o.node);
  auto r = crystal_op(ctx, *f.lusztig, i, o.op == "e" ? CrystalOp::e : CrystalOp::f);
  Outcome out;
  if (!r) {
    out.text = "0\n";
    out.data["result"] = nullptr;
    return out;
  }
  out.text = datum_text(*r) + "\nweight " + to_string(weight_of(ctx, *r)) + "\n";
  out.data["result"] = lusztig_to_json(ctx, *r);
  out.data["weight"] = weight_of(ctx, *r);
  return out;
}

Outcome crystal_reorder(const Options& o) {
  auto f = lusztig_fixture(o);
  const RootContext& ctx = *f.ctx;
  if (o.order.empty() && o.coweight.empty() && o.word.empty())
    throw usage("give the target order with --order, --word or --coweight");
  auto target = order_arg(ctx, o, f.lusztig->order.H);
  auto r = reorder(ctx, *f.lusztig, target);
  Outcome out;
  out.text = "order " + slice_text(ctx, r.order) + "\n" + datum_text(r) + "\n";
  out.data["result"] = lusztig_to_json(ctx, r);
  return out;
}

// ---- polytope

GGMSPolytope polytope_arg(const Options& o) {
  auto f = load_fixture(resolve(o.file));
  if (f.polytope) return *f.polytope;
  if (f.lusztig) return polytope_from_datum(f.ctx, *f.lusztig);
  throw usage(o.file + " holds neither a polytope nor a Lusztig datum");
}

Outcome polytope_build(const Options& o) {
  auto f = lusztig_fixture(o);
  auto P = polytope_from_datum(f.ctx, *f.lusztig);
  Outcome out;
  std::ostringstream os;
  os << "weight " << to_string(P.weight) << ", L " << P.L << ", " << P.vertices.size() << " vertices"
     << (P.partial ? " (partial)" : "") << "\n";
  for (auto& v : P.vertices) os << to_string(v) << "\n";
  for (auto& s : P.issues) os << "issue: " << s << "\n";
  out.text = os.str();
  json fj = fixture_json("polytope", f.ctx);
  json pj = polytope_to_json(P);
  for (auto& [k, v] : pj.items()) fj[k] = v;
  out.data["polytope"] = fj;
  out.data["issues"] = P.issues;
  return out;
}

json face_json(const FaceCheck& f) {
  return {{"classification", f.classification},
          {"status", f.status},
          {"theta", coweight_to_json(f.theta)},
          {"detail", f.detail}};
}

Outcome polytope_validate(const Options& o) {
  auto P = polytope_arg(o);
  auto rep = validate_mv(P, MVOptions{o.strict});
  Outcome out;
  out.ok = rep.ok;
  std::ostringstream os;
  os << (rep.ok ? "pass" : "fail") << "\n";
  std::map<std::pair<std::string, std::string>, int> tally;
  for (auto& f : rep.faces) ++tally[{f.classification, f.status}];
  for (auto& [k, n] : tally) os << "  " << k.first << " " << k.second << ": " << n << "\n";
  for (auto& v : rep.violations) os << "violation: " << v << "\n";
  for (auto& n : rep.notes) os << "note: " << n << "\n";
  out.text = os.str();
  out.data["valid"] = rep.ok;
  out.data["strict"] = o.strict;
  out.data["violations"] = rep.violations;
  out.data["notes"] = rep.notes;
  json faces = json::array();
  for (auto& f : rep.faces) faces.push_back(face_json(f));
  out.data["faces"] = faces;
  return out;
}

Outcome polytope_export(const Options& o) {
  auto P = polytope_arg(o);
  Outcome out;
  if (o.format == "json") {
    json fj = fixture_json("polytope", P.ctx);
    json pj = polytope_to_json(P);
    for (auto& [k, v] : pj.items()) fj[k] = v;
    out.text = fj.dump(2) + "\n";
    out.data["polytope"] = fj;
    return out;
  }
  if (o.format != "svg" && o.format != "tikz") throw usage("--format must be svg, json or tikz");
  Coweight theta = o.face.empty() ? Coweight(P.ctx->datum->rank(), Rational(0)) : parse_coweight(*P.ctx->datum, o.face);
  Face2 f;
  try {
    f = extract_2face(P, theta);
  } catch (const Error& e) {
    throw usage(std::string(e.what()) + (o.face.empty() ? " (choose a face with --face)" : ""));
  }
  out.text = o.format == "svg" ? face_to_svg(f) : face_to_tikz(f);
  out.data["classification"] = f.classification;
  out.data["cycle"] = f.cycle;
  out.data[o.format] = out.text;
  return out;
}

// ---- module

RatModule module_arg(const Options& o) {
  auto f = load_fixture(resolve(o.file));
  if (!f.module) throw usage(o.file + " is not a module fixture");
  return *f.module;
}

Outcome module_validate(const Options& o) {
  auto m = module_arg(o);
  auto r = validate_module(m);
  Outcome out;
  out.ok = r.ok;
  out.text = r.ok ? "pass\n" : "fail: " + r.message + "\n";
  out.data["valid"] = r.ok;
  out.data["dimvec"] = m.dimvec();
  if (!r.ok) out.data["reason"] = r.message;
  return out;
}

Outcome module_sigma(const Options& o) {
  auto m = module_arg(o);
  if (o.node.empty()) throw usage("--node is required");
  int i = parse_node(*m.datum, o.node);
  auto r = o.star ? sigma_star(m, i) : sigma(m, i);
  Outcome out;
  json mj = module_to_json(r);
  out.text = "dimvec " + to_string(r.dimvec()) + "\n" + mj.dump(2) + "\n";
  out.data["dimvec"] = r.dimvec();
  out.data["module"] = mj;
  return out;
}

Outcome module_hn(const Options& o) {
  auto f = load_fixture(resolve(o.file));
  if (!f.module) throw usage(o.file + " is not a module fixture");
  auto ctx = context_for(f.datum);
  auto res = hn_polytope(ctx, *f.module, o.length >= 0 ? std::optional<int>(o.length) : std::nullopt);
  const auto& P = res.polytope;
  Outcome out;
  std::ostringstream os;
  os << "weight " << to_string(P.weight) << ", L " << P.L << ", " << P.vertices.size() << " vertices\n";
  for (auto& v : P.vertices) os << to_string(v) << "\n";
  for (auto& [g, p] : P.partitions) os << "lambda" << to_string(g) << " = " << partition_to_string(p) << "\n";
  for (auto& n : res.notes) os << "note: " << n << "\n";
  out.text = os.str();
  out.data["weight"] = P.weight;
  out.data["L"] = P.L;
  out.data["vertices"] = P.vertices;
  out.data["partitions"] = partitions_to_json(P.partitions);
  json torsion = json::array();
  for (auto& [w, tt] : res.torsion) {
    json wj = json::array();
    for (int i : w) wj.push_back(f.datum->labels[i]);
    torsion.push_back({{"word", wj}, {"top", tt.first}, {"bottom", tt.second}});
  }
  out.data["torsion"] = torsion;
  out.data["notes"] = res.notes;
  return out;
}

Outcome module_core(const Options& o) {
  auto m = module_arg(o);
  auto p = jordan_core_type(m);
  Outcome out;
  std::string s = "[";
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
  out.text = s + "]\n";
  out.data["partition"] = p;
  return out;
}

// ---- check

Outcome check_acceptance(const Options& o) {
  AcceptanceOptions ao;
  ao.seed = o.seed;
  std::vector<CriterionResult> results;
  if (o.criterion > 0) {
    if (o.criterion > kCriterionCount) throw usage("--criterion must be between 1 and " + std::to_string(kCriterionCount));
    results.push_back(run_criterion(o.criterion, ao));
    if (!o.json_out) std::cout << format_result(results.back()) << std::endl;
  } else {
    for (int id = 1; id <= kCriterionCount; ++id) {
      results.push_back(run_criterion(id, ao));
      if (!o.json_out) std::cout << format_result(results.back()) << std::endl;
    }
  }
  Outcome out;
  json arr = json::array();
  int passed = 0;
  for (auto& r : results) {
    passed += r.pass;
    arr.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
  }
  out.ok = passed == static_cast<int>(results.size());
  out.text = std::string(out.ok ? "ALL PASSED " : "FAILED ") + std::to_string(passed) + "/" +
             std::to_string(results.size()) + " (seed " + std::to_string(o.seed) + ")\n";
  out.data["criteria"] = arr;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mirkovic-Vilonen polytopes, Lusztig data and preprojective modules"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_out, "Machine-readable report on stdout");
  app.add_option("--seed", o.seed, "Seed for all randomness")->capture_default_str();

  std::function<Outcome(const Options&)> action;
  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& help,
                  Outcome (*fn)(const Options&)) {
    auto* c = group->add_subcommand(name, help);
    c->fallthrough();
    c->callback([&action, fn]() { action = fn; });
    return c;
  };
  auto add_type = [&](CLI::App* c) { c->add_option("--type,-t", o.type, "Type name (A3, ~A2, ...) or datum JSON file"); };
  auto add_file = [&](CLI::App* c) { c->add_option("file", o.file, "Fixture path or bundled fixture name"); };
  auto add_order = [&](CLI::App* c) {
    c->add_option("--order", o.order, "Order: JSON slice, file, or comma-separated reduced word");
    c->add_option("--word", o.word, "Reduced word, comma separated");
    c->add_option("--coweight", o.coweight, "Generic coweight, comma separated rationals");
    c->add_option("--height", o.height, "Height bound of an affine slice");
  };

  auto* roots = app.add_subcommand("roots", "Root system queries")->require_subcommand(1)->fallthrough();
  auto* c = leaf(roots, "info", "Cartan matrix, delta and spherical chamber coweights", roots_info);
  add_type(c);
  add_file(c);
  c = leaf(roots, "classify", "Classify a vector as real root, imaginary root or neither", roots_classify);
  add_type(c);
  c->add_option("--weight", o.weight, "Root lattice vector, comma separated");

  auto* weyl = app.add_subcommand("weyl", "Weyl group queries")->require_subcommand(1)->fallthrough();
  c = leaf(weyl, "words", "All reduced words of an element (default: longest element)", weyl_words);
  add_type(c);
  c->add_option("--word", o.word, "A word for the element");
  c = leaf(weyl, "inversions", "Inversion set of an element in word order", weyl_inversions);
  add_type(c);
  c->add_option("--word", o.word, "A word for the element");

  auto* order = app.add_subcommand("order", "Convex order slices")->require_subcommand(1)->fallthrough();
  c = leaf(order, "make", "Build an order slice", order_make);
  add_type(c);
  add_order(c);
  c = leaf(order, "move", "Apply a commutation or A2 braid move", order_move_cmd);
  add_type(c);
  add_order(c);
  c->add_option("--position", o.position, "Position of the move")->required();
  c = leaf(order, "validate", "Check that a slice is a convex order", order_validate);
  add_type(c);
  add_order(c);

  auto* crystal = app.add_subcommand("crystal", "Lusztig data and crystal operators")->require_subcommand(1)->fallthrough();
  c = leaf(crystal, "enum", "Enumerate Lusztig data of a weight", crystal_enum);
  add_type(c);
  add_order(c);
  c->add_option("--weight", o.weight, "Weight, comma separated");
  c = leaf(crystal, "count", "Kostant partition function of a weight", crystal_count);
  add_type(c);
  add_order(c);
  c->add_option("--weight", o.weight, "Weight, comma separated");
  c = leaf(crystal, "op", "Apply e_i or f_i to a Lusztig datum fixture", crystal_op_cmd);
  add_file(c);
  c->add_option("--node", o.node, "Node label");
  c->add_option("--op", o.op, "e or f");
  c = leaf(crystal, "reorder", "Transport a Lusztig datum to another order", crystal_reorder);
  add_file(c);
  add_order(c);

  auto* poly = app.add_subcommand("polytope", "MV polytopes")->require_subcommand(1)->fallthrough();
  c = leaf(poly, "build", "Polytope of a Lusztig datum fixture", polytope_build);
  add_file(c);
  c = leaf(poly, "validate", "Check the MV conditions", polytope_validate);
  add_file(c);
  c->add_flag("--strict", o.strict, "Also constrain faces that are points or segments");
  c = leaf(poly, "export", "Write the polytope or one of its 2-faces", polytope_export);
  add_file(c);
  c->add_option("--format", o.format, "svg, json or tikz")->capture_default_str();
  c->add_option("--face", o.face, "Coweight defining the 2-face (svg and tikz)");

  auto* mod = app.add_subcommand("module", "Preprojective algebra modules")->require_subcommand(1)->fallthrough();
  c = leaf(mod, "validate", "Check the preprojective relations and nilpotency", module_validate);
  add_file(c);
  c = leaf(mod, "sigma", "Reflection functor at a node", module_sigma);
  add_file(c);
  c->add_option("--node", o.node, "Node label");
  c->add_flag("--star", o.star, "Use the dual functor");
  c = leaf(mod, "hn", "Harder-Narasimhan polytope", module_hn);
  add_file(c);
  c->add_option("--length", o.length, "Length bound (default: stabilization length)");
  c = leaf(mod, "core", "Jordan type of an affine A1 core", module_core);
  add_file(c);

  auto* check = app.add_subcommand("check", "Self checks")->require_subcommand(1)->fallthrough();
  c = leaf(check, "acceptance", "Run the acceptance criteria", check_acceptance);
  c->add_option("--criterion", o.criterion, "Run a single criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto report = [&](const std::string& status, json data) {
    json j;
    j["status"] = status;
    j["seed"] = o.seed;
    for (auto& [k, v] : data.items()) j[k] = v;
    std::cout << j.dump(2) << std::endl;
  };
  try {
    Outcome r = action(o);
    if (o.json_out) report(r.ok ? "pass" : "fail", r.data);
    else std::cout << r.text << std::flush;
    return r.ok ? 0 : 1;
  } catch (const Error& e) {
    int code = e.kind() == ErrorKind::usage ? 2 : 1;
    if (o.json_out) report(code == 2 ? "usage-error" : "fail", {{"error", e.what()}});
    else std::cerr << "mvkit: " << e.what() << std::endl;
    return code;
  } catch (const json::exception& e) {
    if (o.json_out) report("usage-error", {{"error", e.what()}});
    else std::cerr << "mvkit: malformed JSON: " << e.what() << std::endl;
    return 2;
  }
}
