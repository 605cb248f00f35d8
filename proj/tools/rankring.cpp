// Command-line front end: verify-examples, bench, min-distance, count,
// decode, gen, estimate.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rankring/codes.hpp"
#include "rankring/decoder.hpp"
#include "rankring/fp_poly.hpp"
#include "rankring/io.hpp"
#include "rankring/pir.hpp"
#include "rankring/shapes.hpp"
#include "rankring/vector_rank.hpp"

#ifndef RANKRING_FIXTURES_DIR
#define RANKRING_FIXTURES_DIR "fixtures"
#endif

namespace fs = std::filesystem;
using namespace rankring;

namespace {

enum class Format { Human, Json, Csv };

Format pick_format(const std::string& s, Format fallback) {
  if (s.empty()) return fallback;
  if (s == "human") return Format::Human;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw InvalidParams("--format must be human, json or csv");
}

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidParams(flag + " expects comma-separated integers, got '" + text + "'");
    }
  }
  return out;
}

std::string format_poly(const std::vector<std::uint64_t>& c) {
  std::string out;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
    if (i >= 1) out += 'X';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string rational_decimal(const BigRational& v, int digits = 4) {
  const BigInt scale = big_pow(BigInt(10), digits);
  const BigInt scaled = round_nearest(v * BigRational(scale));
  BigInt whole = scaled / scale, frac = scaled % scale;
  std::string f = frac.str();
  f.insert(f.begin(), digits - f.size(), '0');
  return whole.str() + "." + f;
}

// ---------------------------------------------------------------- verify

struct Check {
  std::string block;
  std::string name;
  std::string expected;
  std::string computed;
  bool pass;
};

class Verifier {
 public:
  explicit Verifier(fs::path dir) : dir_(std::move(dir)) {}

  void expect(const std::string& block, const std::string& name, const std::string& expected,
              const std::string& computed) {
    checks_.push_back({block, name, expected, computed, expected == computed});
  }
  void fail(const std::string& block, const std::string& name, const std::string& why) {
    checks_.push_back({block, name, "ok", why, false});
  }

  Json fixture(const std::string& name) const { return read_json_file((dir_ / name).string()); }
  const std::vector<Check>& checks() const { return checks_; }

 private:
  fs::path dir_;
  std::vector<Check> checks_;
};

void block_irreducible(Verifier& v) {
  const Json j = v.fixture("example31.json");
  const std::uint64_t p = j.at("ring").at("p").get<std::uint64_t>();
  const auto h = j.at("h").get<std::vector<std::uint64_t>>();
  const auto residue = fp::reduce(h, p);
  v.expect("irreducible", "Psi(h) over F_2", format_poly(j.at("expected").at("residue_h").get<std::vector<std::uint64_t>>()),
           format_poly(residue));
  v.expect("irreducible", "Psi(h) irreducible", "yes", yes_no(fp::check_irreducible(residue, p).irreducible));
}

void block_crt(Verifier& v) {
  const Json j = v.fixture("crt40.json");
  const Json& want = j.at("expected");
  const Algebra alg = parse_algebra(j);
  const PirRing& ring = alg.ext.ring();
  v.expect("crt", "eta", want.at("eta").dump(), std::to_string(ring.eta()));
  for (std::size_t c = 0; c < ring.size(); ++c) {
    const std::string key = std::to_string(ring.component(c).modulus());
    v.expect("crt", "idempotent for Z/" + key, want.at("idempotents").at(key).dump(),
             std::to_string(ring.idempotents()[c]));
  }
  v.expect("crt", "combined h", format_poly(want.at("combined_h").get<std::vector<std::uint64_t>>()),
           format_poly(alg.ext.combined_h()));
}

void block_rank(Verifier& v) {
  const Json j = v.fixture("zero_divisor.json");
  const ChainRing z4(2, 2);
  const auto rows = j.at("expected").at("matrix").get<std::vector<std::vector<std::uint64_t>>>();
  const auto a = Matrix<std::uint64_t>::from_rows(rows);
  v.expect("rank", "rk(A) over Z_4", j.at("expected").at("rank_matrix").dump(), std::to_string(rank(z4, a)));
  v.expect("rank", "rk(2A) over Z_4", j.at("expected").at("rank_2matrix").dump(),
           std::to_string(rank(z4, scale(z4, std::uint64_t{2}, a))));
}

void block_zero_divisor(Verifier& v) {
  const Json j = v.fixture("zero_divisor.json");
  const CodeSpec code = parse_code(j);
  const Extension& ext = code.algebra.chain();
  const auto e = parse_vector(j.at("e"), ext.degree(), ext.base().modulus(), "e");
  const auto e2 = scale(ext, ext.from_base(2), e);
  v.expect("zero-divisor", "rk(e)", j.at("expected").at("rank_e").dump(), std::to_string(vector_rank(ext, e)));
  v.expect("zero-divisor", "rk(2e)", j.at("expected").at("rank_2e").dump(), std::to_string(vector_rank(ext, e2)));
  Matrix<ExtElem> extended = code.gens;
  extended.append_row(e);
  v.expect("zero-divisor", "2e in <g, y>", "yes", yes_no(row_module_contains(ext, extended, e2)));
}

void block_distance(Verifier& v) {
  const Json j = v.fixture("example31.json");
  const Json& want = j.at("expected");
  const CodeSpec spec = parse_code(j);
  const Extension& ext = spec.algebra.chain();
  const LinearCode c(ext, spec.gens);
  const int m = ext.degree();
  const auto expected_matrix = [&](const char* key, const Extension& e) {
    return parse_matrix(want.at(key), m, e.base().modulus(), std::string("expected.") + key);
  };

  v.expect("distance", "k(C)", want.at("rank").dump(), std::to_string(c.rank()));
  v.expect("distance", "C free", yes_no(want.at("free").get<bool>()), yes_no(c.is_free()));
  v.expect("distance", "log_2 |C|", want.at("log2_size").dump(), std::to_string(c.log_p_size()));
  const LinearCode env = envelope(c);
  const LinearCode soc = socle(c);
  // The envelope is unique up to isomorphism only: compare the invariants.
  const Matrix<ExtElem> listed_env = expected_matrix("envelope", ext);
  v.expect("distance", "E(C) free of rank 2", "yes", yes_no(env.is_free() && env.rank() == 2));
  v.expect("distance", "C in E(C)", "yes", yes_no(row_module_includes(ext, env.gens(), c.gens())));
  v.expect("distance", "<g1, g2> free envelope of C", "yes",
           yes_no(LinearCode(ext, listed_env).is_free() && row_module_includes(ext, listed_env, c.gens())));
  v.expect("distance", "soc(E(C)) = soc(<g1, g2>)", "yes",
           yes_no(same_row_module(ext, socle(env).gens(), socle(LinearCode(ext, listed_env)).gens())));
  v.expect("distance", "soc(C) = <4g1, 4g2>", "yes", yes_no(same_row_module(ext, soc.gens(), expected_matrix("socle", ext))));
  const LinearCode proj = project_code(env);
  const Extension& field = ext.residue_field();
  v.expect("distance", "Psi(E(C)) = <Psi(g1), Psi(g2)>", "yes",
           yes_no(same_row_module(field, proj.gens(), expected_matrix("projected_envelope", field))));
  v.expect("distance", "log_2 |Psi(E(C))|", want.at("log2_projected_envelope_size").dump(),
           std::to_string(proj.log_p_size()));
  const int d1 = min_rank_distance(c, DistanceMethod::SocleProjection);
  const int d2 = min_rank_distance(c, DistanceMethod::Brute);
  v.expect("distance", "d(C) via Psi(E(C))", want.at("min_distance").dump(), std::to_string(d1));
  v.expect("distance", "d(C) by brute force", want.at("min_distance").dump(), std::to_string(d2));
  v.expect("distance", "correction capability", "1", std::to_string(correction_capability(d2)));
}

void block_decode(Verifier& v) {
  const Json j = v.fixture("final_example.json");
  const InstanceSpec inst = parse_instance(j);
  const Extension& ext = inst.algebra.chain();
  const int m = ext.degree();
  const std::uint64_t mod = ext.base().modulus();
  v.expect("decode", "s = y H^T", format_vector(parse_vector(j.at("s"), m, mod, "s")),
           format_vector(syndrome(ext, *inst.y, inst.H)));
  DecoderParams params;
  params.algorithm = 2;
  params.seed = 0;
  const DecodeReport rep = decode(inst.components().front(), params);
  const auto want_e = parse_vector(j.at("expected").at("e"), m, mod, "expected.e");
  v.expect("decode", "Algorithm 2 error (r = 1)", format_vector(want_e), format_vector(*rep.error));
  const auto c = sub(ext, *inst.y, *rep.error);
  v.expect("decode", "codeword y - e", format_vector(parse_vector(j.at("expected").at("codeword"), m, mod, "codeword")),
           format_vector(c));
  v.expect("decode", "y - e in C", "yes", yes_no(row_module_contains(ext, *inst.gens, c)));
}

int cmd_verify(const std::string& only, const std::string& fixtures, Format fmt) {
  using Block = void (*)(Verifier&);
  const std::vector<std::pair<std::string, Block>> blocks = {
      {"irreducible", block_irreducible}, {"crt", block_crt},         {"rank", block_rank},
      {"zero-divisor", block_zero_divisor}, {"distance", block_distance}, {"decode", block_decode}};
  if (!only.empty() && std::none_of(blocks.begin(), blocks.end(), [&](const auto& b) { return b.first == only; }))
    throw InvalidParams("unknown block '" + only + "' for --only");
  Verifier v{fs::path(fixtures)};
  for (const auto& [name, fn] : blocks) {
    if (!only.empty() && name != only) continue;
    try {
      fn(v);
    } catch (const std::exception& e) {
      v.fail(name, "block raised", e.what());
    }
  }
  const bool ok = std::all_of(v.checks().begin(), v.checks().end(), [](const Check& c) { return c.pass; });
  if (fmt == Format::Json) {
    Json out = Json::array();
    for (const auto& c : v.checks())
      out.push_back({{"block", c.block}, {"check", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
    std::cout << Json{{"checks", out}, {"pass", ok}}.dump(2) << '\n';
  } else if (fmt == Format::Csv) {
    std::cout << "block,check,expected,computed,pass\n";
    for (const auto& c : v.checks())
      std::cout << c.block << ",\"" << c.name << "\",\"" << c.expected << "\",\"" << c.computed << "\"," << (c.pass ? 1 : 0) << '\n';
  } else {
    for (const auto& c : v.checks())
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(13) << c.block << std::setw(32) << c.name
                << " expected " << c.expected << "   computed " << c.computed << '\n';
    std::cout << (ok ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------- gen

struct GenOptions {
  std::uint64_t p = 2;
  int nu = 2;
  std::uint64_t eta = 0;
  int m = 5, n = 5, k = 1, r = 1;
  std::uint64_t seed = 0;
  std::string h;
  std::string shape;
};

struct Generated {
  InstanceSpec inst;
  std::vector<ExtElem> error;
  std::vector<ExtElem> codeword;
};

Generated generate(const GenOptions& o) {
  std::optional<Partition> shape;
  if (!o.shape.empty()) shape = Partition(parse_int_list(o.shape, "--shape"));

  Json ring;
  PirRing pir = decompose(o.eta ? o.eta : checked_power(o.p, o.nu));
  std::vector<Extension> comps;
  if (!o.h.empty()) {
    std::vector<std::uint64_t> h;
    for (int c : parse_int_list(o.h, "--poly")) {
      if (c < 0) throw InvalidParams("--poly coefficients must be non-negative");
      h.push_back(static_cast<std::uint64_t>(c));
    }
    PirExtension tmp(pir, h);
    comps = tmp.components();
  } else {
    for (const auto& c : pir.components()) comps.push_back(default_extension(c.p(), c.nu(), o.m));
  }
  PirExtension ext(pir, comps);
  if (o.eta)
    ring = Json{{"eta", o.eta}};
  else
    ring = Json{{"p", o.p}, {"nu", o.nu}};

  Rng rng(o.seed);
  std::vector<Matrix<ExtElem>> gs, hs;
  std::vector<std::vector<ExtElem>> ys, ss, es, cs;
  for (std::size_t j = 0; j < ext.size(); ++j) {
    PlantedInstance pi = make_planted_instance(ext.component(j), o.n, o.k, o.r, rng, shape);
    gs.push_back(pi.code.gens());
    hs.push_back(pi.H);
    ys.push_back(pi.received);
    ss.push_back(pi.syndrome);
    es.push_back(pi.planted.error);
    cs.push_back(pi.codeword);
  }
  auto combine = [&](const std::vector<Matrix<ExtElem>>& parts) {
    Matrix<ExtElem> out(parts.front().rows(), parts.front().cols(), ExtElem{});
    for (std::size_t i = 0; i < out.rows(); ++i)
      for (std::size_t c = 0; c < out.cols(); ++c) {
        std::vector<ExtElem> slice;
        for (const auto& p : parts) slice.push_back(p(i, c));
        out(i, c) = ext.phi_inverse(slice);
      }
    return out;
  };
  Algebra alg{ext, Json{{"ring", ring}, {"h", ext.combined_h()}}};
  InstanceSpec inst{alg, combine(gs), combine(hs), ext.phi_inverse(ss), ext.phi_inverse(ys), o.r, std::nullopt};
  return Generated{std::move(inst), ext.phi_inverse(es), ext.phi_inverse(cs)};
}

int cmd_gen(const GenOptions& o, const std::string& out_path, Format fmt) {
  const fs::path out(out_path);
  if (out.has_parent_path() && !fs::is_directory(out.parent_path()))
    throw InvalidParams("output directory '" + out.parent_path().string() + "' does not exist");
  Generated g = generate(o);
  write_json_file(out_path, instance_json(g.inst));
  const std::string sidecar = out_path + ".planted.json";
  write_json_file(sidecar, Json{{"e", vector_json(g.error)}, {"codeword", vector_json(g.codeword)}});
  if (fmt == Format::Json)
    std::cout << Json{{"instance", out_path}, {"planted", sidecar}}.dump(2) << '\n';
  else
    std::cout << "wrote " << out_path << " (planted error in " << sidecar << ")\n";
  return 0;
}

// ---------------------------------------------------------------- decode

Json report_json(const DecodeReport& rep, bool with_timing) {
  Json j;
  j["error"] = rep.error ? vector_json(*rep.error) : Json(nullptr);
  j["error_text"] = rep.error ? format_vector(*rep.error) : "";
  j["rank"] = rep.rank;
  j["trials"] = rep.trials;
  j["solve_failures"] = rep.solve_failures;
  j["rank_mismatches"] = rep.rank_mismatches;
  j["enumerated_hits"] = rep.enumerated_hits;
  j["u"] = rep.u;
  j["max_trials"] = rep.max_trials;
  if (with_timing) j["elapsed_seconds"] = rep.elapsed_seconds;
  return j;
}

int cmd_decode(const std::string& path, const DecoderParams& params, bool timing, Format fmt) {
  const InstanceSpec inst = load_instance(path);
  const auto parts = inst.components();
  std::vector<ExtElem> e;
  Json out;
  out["algorithm"] = params.algorithm;
  out["seed"] = params.seed;
  if (inst.algebra.is_chain()) {
    const DecodeReport rep = decode(parts.front(), params);
    e = *rep.error;
    out.update(report_json(rep, timing));
  } else {
    const PirDecodeReport rep = pir_decode(inst.algebra.ext, parts, params);
    e = rep.error;
    out["error"] = vector_json(e);
    out["error_text"] = format_vector(e);
    out["rank"] = pir_rank(inst.algebra.ext, e);
    Json comps = Json::array();
    for (const auto& c : rep.components) comps.push_back(report_json(c, timing));
    out["components"] = comps;
  }
  if (fmt == Format::Human) {
    std::cout << "e = " << format_vector(e) << '\n';
    if (inst.y) {
      std::vector<ExtElem> c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        std::vector<ExtElem> parts_c;
        for (std::size_t j = 0; j < inst.algebra.ext.size(); ++j)
          parts_c.push_back(inst.algebra.ext.component(j).sub(inst.algebra.ext.phi((*inst.y)[i], j),
                                                               inst.algebra.ext.phi(e[i], j)));
        c.push_back(inst.algebra.ext.phi_inverse(parts_c));
      }
      std::cout << "y - e = " << format_vector(c) << '\n';
    }
    std::cout << "trials = " << out.value("trials", 0) << '\n';
  } else {
    std::cout << out.dump(2) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------- estimate

int cmd_estimate(std::uint64_t q, int nu, int m, int n, int k, int r, const std::string& alg, std::optional<int> u,
                 Format fmt) {
  std::vector<int> algs = alg == "both" ? std::vector<int>{1, 2} : std::vector<int>{std::stoi(alg)};
  Json rows = Json::array();
  for (int a : algs) {
    if (a != 1 && a != 2) throw InvalidParams("--algorithm must be 1, 2 or both");
    const int uu = u.value_or(default_u(a, m, n, k));
    const BigRational exact = expected_trials(q, nu, m, n, k, r, a, uu);
    const BigInt approx = approx_expected_trials(q, nu, m, n, k, r, a, u);
    const BigInt ops = operations_per_trial(m, n, k, a, uu);
    const BigRational total_ops = exact * BigRational(ops);
    rows.push_back({{"algorithm", a},
                    {"u", uu},
                    {"expected_trials", boost::multiprecision::numerator(exact).str() + "/" +
                                            boost::multiprecision::denominator(exact).str()},
                    {"expected_trials_decimal", rational_decimal(exact)},
                    {"approx_trials", approx.str()},
                    {"ops_per_trial", ops.str()},
                    {"ops_expression", a == 1 ? "m(n-k)u^2n^2" : "m^3(n-k)^3"},
                    {"expected_ops", rational_decimal(total_ops, 1)}});
  }
  if (fmt == Format::Json) {
    std::cout << rows.dump(2) << '\n';
  } else if (fmt == Format::Csv) {
    std::cout << "algorithm,u,expected_trials,expected_trials_decimal,approx_trials,ops_per_trial,expected_ops\n";
    for (const auto& row : rows)
      std::cout << row["algorithm"] << ',' << row["u"] << ',' << row["expected_trials"].get<std::string>() << ','
                << row["expected_trials_decimal"].get<std::string>() << ',' << row["approx_trials"].get<std::string>()
                << ',' << row["ops_per_trial"].get<std::string>() << ',' << row["expected_ops"].get<std::string>() << '\n';
  } else {
    for (const auto& row : rows)
      std::cout << "Algorithm " << row["algorithm"] << " (u = " << row["u"] << "): expected trials "
                << row["expected_trials"].get<std::string>() << " ~ " << row["expected_trials_decimal"].get<std::string>()
                << ", approx |R|^... = " << row["approx_trials"].get<std::string>() << ", ops/trial "
                << row["ops_expression"].get<std::string>() << " = " << row["ops_per_trial"].get<std::string>()
                << ", expected ops ~ " << row["expected_ops"].get<std::string>() << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------- bench

struct BenchPoint {
  std::uint64_t p;
  int nu, m, n, k, r;
};

BenchPoint parse_point(const std::string& s) {
  std::string t = s;
  std::replace(t.begin(), t.end(), ':', ',');
  const auto v = parse_int_list(t, "--point");
  if (v.size() != 6 || std::any_of(v.begin(), v.end(), [](int x) { return x < 0; }))
    throw InvalidParams("--point expects p:nu:m:n:k:r, got '" + s + "'");
  return BenchPoint{static_cast<std::uint64_t>(v[0]), v[1], v[2], v[3], v[4], v[5]};
}

int cmd_bench(const std::vector<std::string>& points, const std::string& alg, int seeds, std::uint64_t seed_base,
              unsigned workers, double budget, std::uint64_t enum_cap, Format fmt) {
  std::vector<int> algs = alg == "both" ? std::vector<int>{1, 2} : std::vector<int>{std::stoi(alg)};
  for (int a : algs)
    if (a != 1 && a != 2) throw InvalidParams("--algorithm must be 1, 2 or both");
  std::vector<BenchPoint> pts;
  for (const auto& s : points) pts.push_back(parse_point(s));
  const auto start = std::chrono::steady_clock::now();
  Json rows = Json::array();
  const char* header = "p,nu,m,n,k,r,algorithm,u,seeds,mean_trials,median_trials,expected_trials,approx_trials,ratio";
  if (fmt == Format::Csv) std::cout << header << '\n';
  for (const auto& pt : pts) {
    const Extension ext = default_extension(pt.p, pt.nu, pt.m);
    for (int a : algs) {
      const int u = default_u(a, pt.m, pt.n, pt.k);
      std::vector<std::uint64_t> trials;
      for (int s = 0; s < seeds; ++s) {
        if (std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > budget)
          throw TooLarge("bench exceeded its time budget of " + std::to_string(budget) + " s");
        Rng rng(seed_base + static_cast<std::uint64_t>(s));
        PlantedInstance pi = make_planted_instance(ext, pt.n, pt.k, pt.r, rng);
        DecoderParams params;
        params.algorithm = a;
        params.seed = seed_base + static_cast<std::uint64_t>(s);
        params.workers = workers;
        params.solution_enumeration_cap = enum_cap;
        trials.push_back(decode(RsdInstance{ext, pi.H, pi.syndrome, pt.r, std::nullopt}, params).trials);
      }
      double mean = 0, median = 0;
      if (!trials.empty()) {
        for (auto t : trials) mean += static_cast<double>(t);
        mean /= static_cast<double>(trials.size());
        std::sort(trials.begin(), trials.end());
        const std::size_t h = trials.size() / 2;
        median = trials.size() % 2 ? static_cast<double>(trials[h]) : 0.5 * static_cast<double>(trials[h - 1] + trials[h]);
      }
      const BigRational exp = expected_trials(pt.p, pt.nu, pt.m, pt.n, pt.k, pt.r, a);
      const double expd = std::stod(rational_decimal(exp, 6));
      const BigInt approx = approx_expected_trials(pt.p, pt.nu, pt.m, pt.n, pt.k, pt.r, a);
      Json row = {{"p", pt.p},        {"nu", pt.nu},     {"m", pt.m},          {"n", pt.n},
                  {"k", pt.k},        {"r", pt.r},       {"algorithm", a},     {"u", u},
                  {"seeds", seeds},   {"mean_trials", mean}, {"median_trials", median}, {"expected_trials", expd},
                  {"approx_trials", approx.str()}, {"ratio", expd > 0 ? mean / expd : 0.0}};
      rows.push_back(row);
      if (fmt == Format::Csv) {
        std::ostringstream os;
        os << std::setprecision(6) << pt.p << ',' << pt.nu << ',' << pt.m << ',' << pt.n << ',' << pt.k << ',' << pt.r
           << ',' << a << ',' << u << ',' << seeds << ',' << mean << ',' << median << ',' << expd << ',' << approx.str()
           << ',' << row["ratio"].get<double>();
        std::cout << os.str() << '\n';
      }
    }
  }
  if (fmt == Format::Json) std::cout << rows.dump(2) << '\n';
  if (fmt == Format::Human)
    for (const auto& row : rows) std::cout << row.dump() << '\n';
  return 0;
}

// ---------------------------------------------------------------- min-distance, count

int cmd_min_distance(const std::string& path, const std::string& method, Format fmt) {
  const CodeSpec spec = load_code(path);
  if (method != "socle" && method != "brute" && method != "both")
    throw InvalidParams("--method must be socle, brute or both");
  const auto& ext = spec.algebra.ext;
  std::optional<int> ds, db;
  if (method != "brute") ds = pir_min_distance(ext, spec.gens, DistanceMethod::SocleProjection);
  if (method != "socle") db = pir_min_distance(ext, spec.gens, DistanceMethod::Brute);
  if (ds && db && *ds != *db)
    throw InvalidParams("distance methods disagree: " + std::to_string(*ds) + " vs " + std::to_string(*db));
  const int d = ds ? *ds : *db;
  const auto comps = pir_component_codes(ext, spec.gens);
  bool singleton = true;
  for (const auto& c : comps)
    if (!c.is_zero()) singleton = singleton && singleton_holds(c, d);
  if (fmt == Format::Human) {
    std::cout << d << '\n';
  } else if (fmt == Format::Csv) {
    std::cout << "min_distance,rank,capability\n" << d << ',' << pir_code_rank(ext, spec.gens) << ','
              << correction_capability(d) << '\n';
  } else {
    std::cout << Json{{"min_distance", d},
                      {"method", method},
                      {"rank", pir_code_rank(ext, spec.gens)},
                      {"capability", correction_capability(d)},
                      {"singleton_bound_holds", singleton}}
                     .dump(2)
              << '\n';
  }
  return 0;
}

int cmd_count(std::uint64_t q, int nu, int n, int k, const std::string& lambda, const std::string& mu, bool enumerate,
              Format fmt) {
  BigInt value;
  std::string what;
  if (!mu.empty()) {
    if (lambda.empty()) throw InvalidParams("--mu needs --lambda");
    value = count_submodules_of_shape(Partition(parse_int_list(lambda, "--lambda")), Partition(parse_int_list(mu, "--mu")), q);
    what = "submodules of shape " + mu + " in shape " + lambda;
  } else if (!lambda.empty()) {
    value = count_submodules_of_rank(Partition(parse_int_list(lambda, "--lambda")), k, q, nu);
    what = "rank-" + std::to_string(k) + " submodules in shape " + lambda;
  } else if (enumerate) {
    const ChainRing ring(q, nu);
    SubmoduleEnumeration opts;
    opts.ambient_cap = enumeration_cap();
    opts.rank_filter = k;
    value = enumerate_submodules(ring, n, opts, [](const Matrix<std::uint64_t>&) {});
    what = "rank-" + std::to_string(k) + " submodules of (Z/" + std::to_string(ring.modulus()) + ")^" + std::to_string(n) +
           " by enumeration";
  } else {
    value = beta(q, nu, k, n);
    what = "beta(" + std::to_string(q) + "," + std::to_string(nu) + "," + std::to_string(k) + "," + std::to_string(n) + ")";
  }
  if (fmt == Format::Json)
    std::cout << Json{{"what", what}, {"count", value.str()}}.dump(2) << '\n';
  else if (fmt == Format::Csv)
    std::cout << "what,count\n\"" << what << "\"," << value.str() << '\n';
  else
    std::cout << value.str() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rankring: rank-metric codes and rank syndrome decoding over finite rings"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format;
  app.add_option("--format", format, "Output format: human, json or csv")->check(CLI::IsMember({"human", "json", "csv"}));

  auto* verify = app.add_subcommand("verify-examples", "Reproduce the worked examples from the fixtures");
  std::string only, fixtures = RANKRING_FIXTURES_DIR;
  verify->add_option("--only", only, "Run a single block: irreducible, crt, rank, zero-divisor, distance, decode");
  verify->add_option("--fixtures", fixtures, "Fixture directory")->check(CLI::ExistingDirectory);

  auto* bench = app.add_subcommand("bench", "Empirical vs predicted decoder trials (CSV)");
  std::vector<std::string> points;
  std::string bench_alg = "both";
  int bench_seeds = 200;
  std::uint64_t bench_seed = 0, bench_enum = 0;
  unsigned bench_workers = 1;
  double bench_budget = 600;
  bench->add_option("--point", points, "Parameter point p:nu:m:n:k:r (repeatable)");
  bench->add_option("--algorithm", bench_alg, "1, 2 or both");
  bench->add_option("--seeds", bench_seeds, "Planted instances per point")->check(CLI::NonNegativeNumber);
  bench->add_option("--seed-base", bench_seed, "First seed");
  bench->add_option("--workers", bench_workers, "Parallel trial lanes per decode");
  bench->add_option("--time-budget", bench_budget, "Seconds before TooLarge");
  bench->add_option("--enumerate-solutions", bench_enum, "Solution enumeration cap per trial");

  auto* mind = app.add_subcommand("min-distance", "Minimum rank distance of a code file");
  std::string code_path, method = "socle";
  mind->add_option("--code", code_path, "Code JSON file")->required()->check(CLI::ExistingFile);
  mind->add_option("--method", method, "socle, brute or both");

  auto* count = app.add_subcommand("count", "Submodule counts");
  std::uint64_t cq = 2;
  int cnu = 1, cn = 1, ck = 0;
  std::string lambda, mu;
  bool enumerate = false;
  count->add_option("--p,--q", cq, "Residue field size q")->required();
  count->add_option("--nu", cnu, "Nilpotency index");
  count->add_option("--n", cn, "Ambient free rank");
  count->add_option("--k", ck, "Submodule rank");
  count->add_option("--lambda", lambda, "Ambient shape, e.g. 2,2");
  count->add_option("--mu", mu, "Submodule shape, e.g. 2");
  count->add_flag("--enumerate", enumerate, "Count by brute-force enumeration");

  auto* dec = app.add_subcommand("decode", "Decode an RSD instance");
  std::string inst_path;
  DecoderParams params;
  std::optional<int> dec_u;
  std::optional<std::uint64_t> dec_max;
  bool dec_timing = false;
  dec->add_option("--instance", inst_path, "Instance JSON file")->required()->check(CLI::ExistingFile);
  dec->add_option("--algorithm", params.algorithm, "1 or 2")->check(CLI::IsMember({1, 2}));
  dec->add_option("--seed", params.seed, "PRNG seed");
  dec->add_option("--u", dec_u, "Rank of the guessed free module");
  dec->add_option("--max-trials", dec_max, "Trial cap");
  dec->add_option("--workers", params.workers, "Parallel trial lanes");
  dec->add_option("--enumerate-solutions", params.solution_enumeration_cap, "Solution enumeration cap per trial");
  dec->add_flag("--timing", dec_timing, "Include elapsed time in the report");

  auto* gen = app.add_subcommand("gen", "Generate a planted RSD instance");
  GenOptions go;
  std::string gen_out;
  gen->add_option("--p", go.p, "Residue characteristic");
  gen->add_option("--nu", go.nu, "Nilpotency index");
  gen->add_option("--eta", go.eta, "Composite modulus (overrides --p/--nu)");
  gen->add_option("--m", go.m, "Extension degree");
  gen->add_option("--n", go.n, "Code length");
  gen->add_option("--k", go.k, "Code rank");
  gen->add_option("--r", go.r, "Error rank");
  gen->add_option("--seed", go.seed, "PRNG seed");
  gen->add_option("--poly", go.h, "Modulus polynomial, ascending coefficients (comma-separated)");
  gen->add_option("--shape", go.shape, "Error support shape, e.g. 2,1");
  gen->add_option("-o,--output", gen_out, "Output instance file")->required();

  auto* est = app.add_subcommand("estimate", "Expected trial counts and operation counts");
  std::uint64_t eq = 2;
  int enu = 1, em = 1, en = 1, ek = 0, er = 1;
  std::string ealg = "both";
  std::optional<int> eu;
  est->add_option("--p,--q", eq, "Residue field size q")->required();
  est->add_option("--nu", enu, "Nilpotency index")->required();
  est->add_option("--m", em, "Extension degree")->required();
  est->add_option("--n", en, "Code length")->required();
  est->add_option("--k", ek, "Code rank")->required();
  est->add_option("--r", er, "Error rank")->required();
  est->add_option("--algorithm", ealg, "1, 2 or both");
  est->add_option("--u", eu, "Override u");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(only, fixtures, pick_format(format, Format::Human));
    if (bench->parsed())
      return cmd_bench(points, bench_alg, bench_seeds, bench_seed, bench_workers, bench_budget, bench_enum,
                       pick_format(format, Format::Csv));
    if (mind->parsed()) return cmd_min_distance(code_path, method, pick_format(format, Format::Human));
    if (count->parsed()) return cmd_count(cq, cnu, cn, ck, lambda, mu, enumerate, pick_format(format, Format::Human));
    if (dec->parsed()) {
      params.u = dec_u;
      params.max_trials = dec_max;
      return cmd_decode(inst_path, params, dec_timing, pick_format(format, Format::Json));
    }
    if (gen->parsed()) return cmd_gen(go, gen_out, pick_format(format, Format::Human));
    if (est->parsed()) return cmd_estimate(eq, enu, em, en, ek, er, ealg, eu, pick_format(format, Format::Human));
  } catch (const ComputationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
