// singchar command-line front-end.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "singchar/singchar.hpp"

using namespace singchar;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInconsistent = 3 };

struct PolyArgs {
  std::uint64_t characteristic = 0;
  std::string vars = "x,y";
  std::string poly;
  std::string format = "text";
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    const auto b = cur.find_first_not_of(" \t");
    const auto e = cur.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

void add_poly_options(CLI::App* cmd, PolyArgs& a, bool need_poly = true) {
  cmd->add_option("--char", a.characteristic, "characteristic: 0 or a prime");
  cmd->add_option("--vars", a.vars, "comma separated variable names")->capture_default_str();
  auto* p = cmd->add_option("--poly", a.poly, "polynomial, e.g. \"y2+x3y\" or \"y^2 + x^3*y\"");
  if (need_poly) p->required();
  cmd->add_option("--format", a.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

RingPtr ring_of(const PolyArgs& a) { return make_ring(CoefficientField(a.characteristic), split(a.vars, ',')); }

/// Calls fn(Poly<K>) with K chosen by the characteristic.
template <class Fn>
json with_poly(const PolyArgs& a, Fn&& fn) {
  const RingPtr ring = ring_of(a);
  if (a.characteristic == 0) return fn(parse<Rational>(a.poly, ring));
  return fn(parse<Zp>(a.poly, ring));
}

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

void emit(const json& j, const std::string& format) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    flatten(j, "", std::cout);
}

std::set<std::string> parse_skip(const std::string& s) {
  std::set<std::string> out;
  for (const auto& t : split(s, ',')) {
    const auto& st = report_stages();
    if (std::find(st.begin(), st.end(), t) == st.end())
      fail(Errc::SyntaxError, "unknown stage '" + t + "' (stages: mu, tau, determinacy, newton, nondeg, curve)");
    out.insert(t);
  }
  return out;
}

std::string vars_string(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (!v.is_array()) fail(Errc::SyntaxError, "\"vars\" must be a list or a comma separated string");
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x.get<std::string>();
  return s;
}

json batch_record(const std::string& line, const ReportOptions& opt) {
  try {
    const json rec = json::parse(line);
    if (!rec.is_object() || !rec.contains("poly")) fail(Errc::SyntaxError, "record needs a \"poly\" field");
    const std::int64_t ch = rec.value("char", std::int64_t{0});
    if (ch < 0) fail(Errc::InvalidCharacteristic, "characteristic must be 0 or prime");
    const std::string vars = rec.contains("vars") ? vars_string(rec["vars"]) : "x,y";
    return invariant_report(static_cast<std::uint64_t>(ch), split(vars, ','), rec["poly"].get<std::string>(), opt);
  } catch (const Error& e) {
    return error_json(e);
  } catch (const json::exception& e) {
    return {{"error", {{"code", "SyntaxError"}, {"message", std::string("malformed record: ") + e.what()}}}};
  }
}

int run_batch(const std::string& input, const std::string& output, unsigned jobs, const ReportOptions& opt) {
  std::ifstream in(input);
  if (!in) {
    std::cerr << "error: cannot read " << input << "\n";
    return kUsage;
  }
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);)
    if (l.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(l);

  std::vector<json> results(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < lines.size();) results[i] = batch_record(lines[i], opt);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::ofstream file;
  if (!output.empty() && output != "-") {
    file.open(output);
    if (!file) {
      std::cerr << "error: cannot write " << output << "\n";
      return kUsage;
    }
  }
  std::ostream& out = file.is_open() ? file : std::cout;
  bool inconsistent = false;
  for (const auto& r : results) {
    out << r.dump() << "\n";
    if (r.contains("error") && r["error"]["code"] == "InternalInconsistency") inconsistent = true;
  }
  return inconsistent ? kInconsistent : kOk;
}

template <Coefficient K>
std::vector<Poly<K>> oracle_generators(const Poly<K>& f, const std::string& ideal) {
  if (ideal == "jacobian") return jacobian_ideal(f);
  if (ideal == "tjurina") return tjurina_ideal(f);
  return {f};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"singularity invariants of power series in arbitrary characteristic"};
  app.require_subcommand(1);

  PolyArgs pa;
  std::string skip;
  bool timing = false;
  auto* inv = app.add_subcommand("invariants", "full invariant report");
  add_poly_options(inv, pa);
  inv->add_option("--skip", skip, "comma separated stages to skip");
  inv->add_flag("--timing", timing, "add per-stage wall times");

  auto* newton = app.add_subcommand("newton", "Newton diagram, volumes, mu_N, delta_N, r_N (n = 2)");
  add_poly_options(newton, pa);

  std::string weights;
  auto* nondeg = app.add_subcommand("nondeg", "non-degeneracy verdicts (n = 2), or an rSQH test with --weights");
  add_poly_options(nondeg, pa);
  nondeg->add_option("--weights", weights, "comma separated weights for the rSQH test");

  std::string kind = "both";
  auto* det = app.add_subcommand("determinacy", "finite determinacy bounds");
  add_poly_options(det, pa);
  det->add_option("--kind", kind, "right, contact or both")
      ->check(CLI::IsMember({"right", "contact", "both"}))
      ->capture_default_str();

  auto* curve = app.add_subcommand("curve", "delta, r, blowup nu and Milnor's formula (n = 2)");
  add_poly_options(curve, pa);

  std::string gens, ideal = "jacobian";
  std::uint64_t degree = 0, ceiling = 64;
  auto* oracle = app.add_subcommand("oracle", "brute-force quotient dimension by truncated linear algebra");
  add_poly_options(oracle, pa, false);
  oracle->add_option("--gens", gens, "semicolon separated generators (instead of --poly)");
  oracle->add_option("--ideal", ideal, "ideal of --poly: jacobian, tjurina or principal")
      ->check(CLI::IsMember({"jacobian", "tjurina", "principal"}))
      ->capture_default_str();
  oracle->add_option("--degree", degree, "fixed truncation degree D (default: adaptive)");
  oracle->add_option("--ceiling", ceiling, "largest adaptive D")->capture_default_str();

  std::string input, output;
  unsigned jobs = 1;
  auto* batch = app.add_subcommand("batch", "JSON-lines batch of invariant reports");
  batch->add_option("--input", input, "records {\"char\", \"vars\", \"poly\"}, one per line")->required();
  batch->add_option("--output", output, "output path (default stdout)");
  batch->add_option("--jobs", jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  batch->add_option("--skip", skip, "comma separated stages to skip");

  std::string suite = "all", chars = "0,2,3,5,7";
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "seeded property suites");
  verify->add_option("--suite", suite, "suite name or all")->capture_default_str();
  verify->add_option("--samples", samples, "samples per suite")->capture_default_str();
  verify->add_option("--seed", seed, "random seed (SINGCHAR_SEED overrides)")->capture_default_str();
  verify->add_option("--chars", chars, "comma separated characteristics")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*inv) {
      ReportOptions opt{parse_skip(skip), timing};
      emit(with_poly(pa, [&](const auto& f) { return invariant_report(f, opt); }), pa.format);
    } else if (*newton) {
      emit(with_poly(pa, [](const auto& f) { return newton_json(f); }), pa.format);
    } else if (*nondeg) {
      emit(with_poly(pa,
                     [&](const auto& f) -> json {
                       if (!weights.empty()) {
                         std::vector<std::uint64_t> w;
                         for (const auto& t : split(weights, ',')) w.push_back(std::stoull(t));
                         return to_json(rsqh_check(f, WeightVector(w)));
                       }
                       detail::require_newton_input(f);
                       return to_json(nondegeneracy(f));
                     }),
           pa.format);
    } else if (*det) {
      emit(with_poly(pa,
                     [&](const auto& f) {
                       json j;
                       const auto& vars = f.ring()->variables();
                       if (kind != "contact") j["right"] = to_json(determinacy_bound(f, EquivalenceKind::Right), vars);
                       if (kind != "right") j["contact"] = to_json(determinacy_bound(f, EquivalenceKind::Contact), vars);
                       return j;
                     }),
           pa.format);
    } else if (*curve) {
      emit(with_poly(pa, [](const auto& f) { return to_json(milnor_formula_check(f)); }), pa.format);
    } else if (*oracle) {
      if (gens.empty() == pa.poly.empty()) fail(Errc::SyntaxError, "give exactly one of --poly and --gens");
      auto run = [&](auto tag) {
        using K = decltype(tag);
        const RingPtr ring = ring_of(pa);
        std::vector<Poly<K>> g;
        if (!gens.empty())
          for (const auto& t : split(gens, ';')) g.push_back(parse<K>(t, ring));
        else
          g = oracle_generators(parse<K>(pa.poly, ring), ideal);
        const OracleResult r = degree > 0 ? quotient_dim_truncated(g, degree) : oracle_dimension(g, ceiling);
        json j = to_json(r);
        j["std_dim"] = to_json(local_codimension(g));
        return j;
      };
      emit(pa.characteristic == 0 ? run(Rational{}) : run(Zp{}), pa.format);
    } else if (*batch) {
      return run_batch(input, output, jobs, ReportOptions{parse_skip(skip), false});
    } else if (*verify) {
      if (const char* env = std::getenv("SINGCHAR_SEED")) {
        try {
          std::size_t used = 0;
          seed = std::stoull(env, &used);
          if (used != std::string(env).size()) throw std::invalid_argument(env);
        } catch (const std::exception&) {
          std::cerr << "error: SINGCHAR_SEED must be a non-negative integer\n";
          return kUsage;
        }
      }
      VerifyOptions opt;
      opt.samples = samples;
      opt.seed = seed;
      opt.chars.clear();
      for (const auto& c : split(chars, ',')) opt.chars.push_back(std::stoull(c));
      bool ok = true;
      for (const auto& r : run_suite(suite, opt)) {
        std::cout << render(r);
        ok = ok && r.passed();
      }
      return ok ? kOk : kVerifyFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return e.code() == Errc::InternalInconsistency ? kInconsistent : kUsage;
  } catch (const std::logic_error& e) {  // stoull on malformed numbers
    std::cerr << "error: malformed number: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
