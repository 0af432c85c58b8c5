#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "surgery/floer.hpp"
#include "surgery/relations.hpp"
#include "surgery/torsion.hpp"

namespace surgery::cli {
namespace fs = std::filesystem;
using nlohmann::json;

std::filesystem::path Cache::path_for(const std::string& kind, const json& params) const {
  std::string name = kind;
  for (const auto& [k, v] : params.items()) name += "-" + k + (v.is_string() ? v.get<std::string>() : v.dump());
  return *dir_ / (name + ".json");
}

std::optional<json> Cache::load(const std::string& kind, const json& params) const {
  if (!dir_) return std::nullopt;
  std::ifstream in(path_for(kind, params));
  if (!in) return std::nullopt;
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
  if (doc.value("tool_version", "") != kToolVersion || doc.value("kind", "") != kind) return std::nullopt;
  if (doc.value("params", json()) != params || !doc.contains("results")) return std::nullopt;
  return doc["results"];
}

void Cache::store(const std::string& kind, const json& params, const json& results) const {
  if (!dir_) return;
  std::error_code ec;
  fs::create_directories(*dir_, ec);
  fs::path target = path_for(kind, params), tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;  // unwritable cache dir: just run uncached
    json doc = {{"kind", kind}, {"params", params}, {"results", results}, {"tool_version", kToolVersion}};
    out << doc.dump(2) << "\n";
  }
  fs::rename(tmp, target, ec);
}

namespace {

std::string frac(const Rational& r) { return to_fraction_string(r); }

json fracs(const std::vector<Rational>& v) {
  json a = json::array();
  for (const Rational& x : v) a.push_back(frac(x));
  return a;
}

std::string str(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string joined(const json& arr, const char* sep = ";") {
  std::string s;
  for (const auto& x : arr) s += (s.empty() ? "" : sep) + str(x);
  return s;
}

// Per-run bookkeeping for cache_hit: true only if every cached lookup hit.
struct Lookup {
  const Cache& cache;
  bool used = false, all_hit = true;

  json get(const std::string& kind, const json& params, const std::function<json()>& compute) {
    used = true;
    if (auto hit = cache.load(kind, params)) return *hit;
    all_hit = false;
    json r = compute();
    cache.store(kind, params, r);
    return r;
  }
  bool hit() const { return cache.enabled() && used && all_hit; }
};

using Rows = std::vector<std::vector<std::string>>;

struct Outcome {
  json results;
  std::vector<std::string> header;
  Rows rows;
  std::string violation;  // nonempty: print, then exit 2
};

Outcome cmd_dinv(Lookup& look, const KnotModel& K, std::int64_t p, std::int64_t q, bool all) {
  SurgerySlope slope(p, q);
  if (gcd(p, q) != 1) throw NotCoprime(p, q);
  json params = {{"all_spinc", all}, {"knot", K.name()}, {"p", p}, {"q", q}};
  json r = look.get("dinv", params, [&] {
    json rows = json::array();
    if (all) {
      auto h = cone_homology_all(K, p, q);
      for (std::size_t i = 0; i < h.size(); ++i)
        rows.push_back({{"d", frac(h[i].d)}, {"i", i}, {"red_rank", h[i].red_rank}});
    } else {
      for (std::int64_t i : spin_classes(p, q)) {
        ConeHomology h = stable_cone_homology(K, p, q, i);
        rows.push_back({{"d", frac(h.d)}, {"i", i}, {"red_rank", h.red_rank}});
      }
    }
    return json{{"classes", rows}, {"knot", K.name()}, {"p", p}, {"q", q}};
  });
  Outcome o{r, {"knot", "p", "q", "i", "d", "red_rank"}, {}, {}};
  for (const auto& c : r["classes"])
    o.rows.push_back({K.name(), std::to_string(p), std::to_string(q), str(c["i"]), str(c["d"]), str(c["red_rank"])});
  return o;
}

Outcome cmd_torsion_pair(const KnotModel& K, std::int64_t p, std::int64_t q, std::int64_t qp) {
  std::int64_t P = std::abs(p);
  TorsionProfile a = torsion_profile(P, q, K.alexander()), b = torsion_profile(P, qp, K.alexander());
  auto w = torsion_equivalent(P, q, qp, K.alexander());
  json r = {{"a", a.a},         {"a_prime", b.a}, {"equivalent", !w.empty()}, {"knot", K.name()},
            {"p", p},           {"q", q},         {"q_prime", qp},            {"witnesses", w}};
  return {r,
          {"knot", "p", "q", "q_prime", "equivalent", "witnesses"},
          {{K.name(), std::to_string(p), std::to_string(q), std::to_string(qp), w.empty() ? "false" : "true",
            joined(r["witnesses"])}},
          {}};
}

json verdict_json(const CosmeticVerdict& v, const std::string& knot) {
  auto opt = [](const std::optional<Rational>& x) { return x ? json(frac(*x)) : json(); };
  return {{"k", v.k ? json(*v.k) : json()},
          {"kind", to_string(v.kind)},
          {"knot", knot},
          {"lambda", opt(v.lambda)},
          {"lambda_prime", opt(v.lambda_prime)},
          {"p", v.p},
          {"q", v.q},
          {"q_prime", v.q_prime},
          {"spin_d", fracs(v.spin_d)},
          {"spin_d_prime", fracs(v.spin_d_prime)},
          {"torsion_witnesses", v.torsion_witnesses},
          {"verdict", v.label()}};
}

const std::vector<std::string> kVerdictHeader = {"knot", "p", "q", "q_prime", "verdict"};

std::vector<std::string> verdict_row(const json& v) {
  return {str(v["knot"]), str(v["p"]), str(v["q"]), str(v["q_prime"]), str(v["verdict"])};
}

Outcome cmd_verdict(const KnotModel& K, std::int64_t p, std::int64_t q, std::int64_t qp) {
  json r = verdict_json(cosmetic_verdict(p, q, qp, K), K.name());
  return {r, kVerdictHeader, {verdict_row(r)}, {}};
}

json mathieu_families(std::int64_t pmax) {
  json out = json::array();
  for (std::int64_t k = 0; 18 * k + 9 <= pmax; ++k) {
    out.push_back({{"knot", "ltrefoil"}, {"p", -(18 * k + 9)}, {"q", 3 * k + 1}, {"q_prime", 3 * k + 2}});
    out.push_back({{"knot", "rtrefoil"}, {"p", 18 * k + 9}, {"q", 3 * k + 1}, {"q_prime", 3 * k + 2}});
  }
  return out;
}

Outcome cmd_enumerate(Lookup& look, std::int64_t pmax) {
  if (pmax < 1) throw std::invalid_argument("--pmax must be >= 1");
  json r = look.get("enumerate", {{"pmax", pmax}}, [&] {
    EnumerationReport rep = enumerate_cosmetic(pmax);
    std::vector<json> reflective, truly;
    for (std::size_t i = 0; i < rep.survivors.size(); ++i) {
      json v = verdict_json(rep.survivors[i], rep.survivor_knots[i]);
      (rep.survivors[i].kind == VerdictKind::TrulyCosmeticCandidate ? truly : reflective).push_back(v);
    }
    auto key = [](const json& v) {
      return std::tuple(v["knot"].get<std::string>(), v["p"].get<std::int64_t>(), v["q"].get<std::int64_t>(),
                        v["q_prime"].get<std::int64_t>());
    };
    auto by_key = [&](const json& a, const json& b) { return key(a) < key(b); };
    std::sort(reflective.begin(), reflective.end(), by_key);
    std::sort(truly.begin(), truly.end(), by_key);
    json counts = json::object();
    for (const auto& [kind, n] : rep.counts) counts[kind] = n;
    return json{{"counts", counts}, {"pairs", rep.pairs}, {"pmax", pmax}, {"reflective", reflective},
                {"truly_cosmetic", truly}};
  });

  std::set<json> found, expected;
  for (const auto& v : r["reflective"])
    found.insert(json{{"knot", v["knot"]}, {"p", v["p"]}, {"q", v["q"]}, {"q_prime", v["q_prime"]}});
  for (const auto& v : mathieu_families(pmax)) expected.insert(v);
  r["matches_mathieu_families"] = found == expected;

  Outcome o{r, kVerdictHeader, {}, {}};
  for (const auto& v : r["truly_cosmetic"]) o.rows.push_back(verdict_row(v));
  for (const auto& v : r["reflective"]) o.rows.push_back(verdict_row(v));
  if (!r["truly_cosmetic"].empty()) o.violation = "truly cosmetic survivor on a genus-one model";
  else if (!r["matches_mathieu_families"].get<bool>()) o.violation = "reflective survivors differ from the 18k+9 families";
  return o;
}

json pair_list(const std::vector<std::pair<std::int64_t, std::int64_t>>& v) {
  json a = json::array();
  for (auto [x, y] : v) a.push_back({x, y});
  return a;
}

Outcome cmd_verify(Lookup& look, std::int64_t mmax) {
  if (mmax < 3) throw std::invalid_argument("--mmax must be >= 3");
  json moduli = json::array();
  bool all = true;
  Outcome o{{}, {"m", "triples", "pairs", "agrees"}, {}, {}};
  for (std::int64_t m = 3; m <= mmax; ++m) {
    json row = look.get("ratio", {{"m", m}}, [&] {
      auto triples = theorem31_bruteforce(m);
      auto pairs = ratio_pairs(triples);
      auto expected = ratio_expected_pairs(m);
      return json{{"agrees", pairs == expected}, {"expected", pair_list(expected)}, {"m", m},
                  {"pairs", pair_list(pairs)}, {"triples", triples.size()}};
    });
    all = all && row["agrees"].get<bool>();
    std::string pairs;
    for (const auto& pr : row["pairs"]) pairs += (pairs.empty() ? "" : ";") + str(pr[0]) + ":" + str(pr[1]);
    o.rows.push_back({str(row["m"]), str(row["triples"]), pairs, str(row["agrees"])});
    moduli.push_back(row);
  }
  o.results = {{"all_agree", all}, {"mmax", mmax}, {"moduli", moduli}};
  if (!all) o.violation = "ratio search disagrees with the three-case classification";
  return o;
}

Outcome cmd_franz(Lookup& look, std::int64_t m, std::int64_t box) {
  if (m < 3) throw std::invalid_argument("--m must be >= 3");
  if (box < 0) throw std::invalid_argument("--box must be >= 0");
  json r = look.get("franz", {{"box", box}, {"m", m}}, [&] {
    FranzReport rep = franz_search(m, box);
    return json{{"box", box},
                {"candidates", rep.candidates},
                {"counterexamples", rep.counterexamples},
                {"holds", rep.holds()},
                {"m", m},
                {"prefilter_survivors", rep.prefilter_survivors}};
  });
  Outcome o{r,
            {"m", "box", "candidates", "prefilter_survivors", "counterexamples", "holds"},
            {{str(r["m"]), str(r["box"]), str(r["candidates"]), str(r["prefilter_survivors"]),
              std::to_string(r["counterexamples"].size()), str(r["holds"])}},
            {}};
  if (!r["holds"].get<bool>()) o.violation = "nonzero symmetric vector with trivial product";
  return o;
}

Outcome cmd_cw(const KnotModel& K, std::int64_t p, std::int64_t q) {
  SurgerySlope slope(p, q);
  if (gcd(p, q) != 1) throw NotCoprime(p, q);
  std::string lambda = frac(casson_walker(p, q, K));
  json r = {{"knot", K.name()}, {"lambda", lambda}, {"p", p}, {"q", q}};
  return {r, {"knot", "p", "q", "lambda"}, {{K.name(), std::to_string(p), std::to_string(q), lambda}}, {}};
}

Outcome cmd_cf(std::int64_t p, std::int64_t q) {
  PlumbingGraph g = neg_continued_fraction(p, q);
  json r = {{"p", p}, {"q", q}, {"value", frac(g.value())}, {"weights", g.weights()}};
  return {r, {"p", "q", "weights"}, {{std::to_string(p), std::to_string(q), joined(r["weights"])}}, {}};
}

void write_csv(std::ostream& out, const Outcome& o) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << "\n";
  };
  line(o.header);
  for (const auto& r : o.rows) line(r);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const char* env_cache) {
  CLI::App app{"Obstructions to cosmetic surgeries on genus-one knots", "surgery_obstructor"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json", cache_dir;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--cache-dir", cache_dir, "Memo cache directory (default: $SURGERY_OBSTRUCTOR_CACHE)");

  std::int64_t p = 0, q = 0, qp = 0, pmax = 0, mmax = 0, m = 0, box = 0;
  std::string knot = "rtrefoil";
  bool all_spinc = false;
  auto knots = CLI::IsMember({"unknot", "rtrefoil", "ltrefoil"});

  auto* dinv = app.add_subcommand("d-inv", "d-invariants of S^3_{P/Q}(K)");
  dinv->add_option("P", p)->required();
  dinv->add_option("Q", q)->required();
  dinv->add_option("--knot", knot)->check(knots);
  dinv->add_flag("--all-spinc", all_spinc, "Every Spin^c class, not just the self-conjugate ones");

  auto* tpair = app.add_subcommand("torsion-pair", "Torsion equivalence of P/Q and P/Q'");
  tpair->add_option("P", p)->required();
  tpair->add_option("Q", q)->required();
  tpair->add_option("Qprime", qp)->required();
  tpair->add_option("--knot", knot)->check(knots);

  auto* verdict = app.add_subcommand("verdict", "Run the obstruction chain on P/Q vs P/Q'");
  verdict->add_option("P", p)->required();
  verdict->add_option("Q", q)->required();
  verdict->add_option("Qprime", qp)->required();
  verdict->add_option("--knot", knot)->check(knots)->required();

  auto* enumerate = app.add_subcommand("enumerate", "All same-slope-sign pairs on both trefoil models");
  enumerate->add_option("--pmax", pmax)->required();

  auto* verify = app.add_subcommand("verify-thm31", "Brute-force unit ratio search for 3 <= m <= mmax");
  verify->add_option("--mmax", mmax)->required();

  auto* franz = app.add_subcommand("franz", "Search for nonzero symmetric vectors with trivial product");
  franz->add_option("--m", m)->required();
  franz->add_option("--box", box)->required();

  auto* cw = app.add_subcommand("cw", "Casson-Walker invariant of S^3_{P/Q}(K)");
  cw->add_option("P", p)->required();
  cw->add_option("Q", q)->required();
  cw->add_option("--knot", knot)->check(knots)->required();

  auto* cf = app.add_subcommand("cf", "Negative continued fraction of -P/Q");
  cf->add_option("P", p)->required();
  cf->add_option("Q", q)->required();

  std::vector<std::string> argv_store = {"surgery_obstructor"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  if (cache_dir.empty() && env_cache) cache_dir = env_cache;
  Cache cache(cache_dir.empty() ? std::nullopt : std::optional<fs::path>(cache_dir));
  Lookup look{cache};

  CLI::App* sub = app.get_subcommands().front();
  json inputs = json::object();
  Outcome o;
  try {
    KnotModel K = KnotModel::parse(knot);
    if (sub == dinv) {
      inputs = {{"all_spinc", all_spinc}, {"knot", knot}, {"p", p}, {"q", q}};
      o = cmd_dinv(look, K, p, q, all_spinc);
    } else if (sub == tpair) {
      inputs = {{"knot", knot}, {"p", p}, {"q", q}, {"q_prime", qp}};
      o = cmd_torsion_pair(K, p, q, qp);
    } else if (sub == verdict) {
      inputs = {{"knot", knot}, {"p", p}, {"q", q}, {"q_prime", qp}};
      o = cmd_verdict(K, p, q, qp);
    } else if (sub == enumerate) {
      inputs = {{"pmax", pmax}};
      o = cmd_enumerate(look, pmax);
    } else if (sub == verify) {
      inputs = {{"mmax", mmax}};
      o = cmd_verify(look, mmax);
    } else if (sub == franz) {
      inputs = {{"box", box}, {"m", m}};
      o = cmd_franz(look, m, box);
    } else if (sub == cw) {
      inputs = {{"knot", knot}, {"p", p}, {"q", q}};
      o = cmd_cw(K, p, q);
    } else {
      inputs = {{"p", p}, {"q", q}};
      o = cmd_cf(p, q);
    }
  } catch (const WindowTooSmall& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariant;
  } catch (const SurgeryError& e) {
    err << sub->get_name() << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << sub->get_name() << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariant;
  }

  if (format == "csv") {
    write_csv(out, o);
  } else {
    json env = {{"cache_hit", look.hit()},
                {"command", sub->get_name()},
                {"inputs", inputs},
                {"results", o.results},
                {"tool_version", kToolVersion}};
    out << env.dump(2) << "\n";
  }
  if (!o.violation.empty()) {
    err << "invariant violated: " << o.violation << "\n";
    return kInvariant;
  }
  return kOk;
}

}  // namespace surgery::cli
