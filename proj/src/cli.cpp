// Copyright 2026 The Cyclotorus Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cyclotorus/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "cyclotorus/cyclo.hpp"
#include "cyclotorus/errors.hpp"
#include "cyclotorus/modinv.hpp"
#include "cyclotorus/serialize.hpp"
#include "cyclotorus/torus.hpp"

namespace cyclotorus::cli {
namespace {

using serialize::Json;
using serialize::to_json;

struct Outcome {
  Json result;
  bool ok = true;
};

struct Line {
  Json json;
  bool pass = false;
};

void require_index(std::uint64_t n, const char* name) {
  if (n == 0) throw InvalidArgument(std::string(name) + " must be a positive integer");
  if (n > kMaxIndex) {
    throw CeilingExceeded(std::string(name) + " = " + std::to_string(n) + " exceeds the index ceiling " +
                          std::to_string(kMaxIndex));
  }
}

Integer parse_integer(const std::string& s, const char* name) {
  Integer v;
  if (s.empty() || v.set_str(s, 10) != 0) throw InvalidArgument(std::string(name) + ": not an integer: " + s);
  return v;
}

Outcome cmd_phi(std::uint64_t n) {
  require_index(n, "n");
  const auto& phi = cyclo::cyclotomic(n);
  return {{{"n", n}, {"degree", phi.degree()}, {"coeffs", to_json(phi)}}};
}

Outcome cmd_res(std::uint64_t m, std::uint64_t n) {
  require_index(m, "m");
  require_index(n, "n");
  const Integer generic = exactalg::resultant(cyclo::cyclotomic(m), cyclo::cyclotomic(n));
  Json out = {{"m", m}, {"n", n}, {"resultant", to_json(generic)}};
  if (m == n) {
    out["closed_form"] = nullptr;
    return {std::move(out)};
  }
  const std::uint64_t hi = std::max(m, n), lo = std::min(m, n);
  const Integer closed = cyclo::resultant_apostol(hi, lo);
  const bool match = closed == abs(generic);
  out["closed_form"] = to_json(closed);
  out["lemma1_nontrivial"] = cyclo::lemma1_nontrivial(hi, lo);
  out["match"] = match;
  return {std::move(out), match};
}

Outcome cmd_inv(std::uint64_t m, std::uint64_t n) {
  require_index(m, "m");
  require_index(n, "n");
  const auto u = modinv::inverse_mod(m, n);
  Json out = to_json(u);
  out["degree"] = u.degree();
  return {std::move(out)};
}

Outcome cmd_eval(std::uint64_t n, const std::string& q_text) {
  require_index(n, "n");
  const Integer q = parse_integer(q_text, "q");
  return {{{"n", n}, {"q", to_json(q)}, {"value", to_json(exactalg::eval(cyclo::cyclotomic(n), q))}}};
}

std::vector<Line> run_parallel(const std::vector<std::function<std::vector<Line>()>>& tasks, unsigned jobs) {
  std::vector<std::vector<Line>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) slots[i] = tasks[i]();
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::jthread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  pool.clear();
  std::vector<Line> out;
  for (auto& s : slots) {
    for (auto& l : s) out.push_back(std::move(l));
  }
  return out;
}

Line failure_line(Json head, const std::exception& e) {
  head["error"] = e.what();
  head["pass"] = false;
  return {std::move(head), false};
}

std::vector<std::function<std::vector<Line>()>> verify_tasks(const std::string& mode, std::uint64_t max) {
  std::vector<std::function<std::vector<Line>()>> tasks;
  if (mode == "resultants") {
    for (std::uint64_t m = 2; m <= max; ++m) {
      for (std::uint64_t n = 1; n < m; ++n) {
        tasks.push_back([m, n]() -> std::vector<Line> {
          const Integer generic = exactalg::resultant(cyclo::cyclotomic(m), cyclo::cyclotomic(n));
          const Integer closed = cyclo::resultant_apostol(m, n);
          const bool nontrivial = cyclo::lemma1_nontrivial(m, n);
          const bool pass = closed == abs(generic) && nontrivial == (closed != 1);
          Json j = {{"mode", "resultants"},         {"m", m},
                    {"n", n},                       {"generic", to_json(generic)},
                    {"closed_form", to_json(closed)}, {"lemma1_nontrivial", nontrivial},
                    {"pass", pass}};
          return {{std::move(j), pass}};
        });
      }
    }
    return tasks;
  }
  for (const auto& pair : cyclo::ordered_prime_pairs(max)) {
    if (mode == "lamleung" && pair.p() > pair.r()) continue;
    tasks.push_back([pair, mode]() -> std::vector<Line> {
      Json head = {{"mode", mode}, {"p", pair.p()}, {"r", pair.r()}};
      std::vector<Line> out;
      try {
        if (mode == "theorem1") {
          for (const auto& rep : modinv::verify_theorem1(pair)) {
            Json j = {{"mode", mode}};
            j.update(to_json(rep));
            out.push_back({std::move(j), rep.bound_satisfied});
          }
        } else if (mode == "alternation") {
          const auto t = modinv::tilde_u(pair.p(), pair.r());
          head["tilde_u"] = to_json(t);
          head["pass"] = true;
          out.push_back({std::move(head), true});
        } else {
          const auto ll = cyclo::lam_leung_phi_pr(pair);
          const bool pass = ll == cyclo::cyclotomic(pair.pr()) && modinv::coefficients_within(ll, -1, 1);
          head["s"] = pair.s();
          head["t"] = pair.t();
          head["pass"] = pass;
          out.push_back({std::move(head), pass});
        }
      } catch (const TheoremViolation& e) {
        out.push_back(failure_line(std::move(head), e));
      }
      return out;
    });
  }
  return tasks;
}

Outcome cmd_verify(const std::string& mode, std::uint64_t max, std::uint64_t ceiling, unsigned jobs,
                   std::ostream& out) {
  if (max < 2) throw InvalidArgument("--max must be at least 2");
  if (max > ceiling) {
    throw InvalidArgument("--max " + std::to_string(max) + " exceeds the ceiling " + std::to_string(ceiling));
  }
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  const auto lines = run_parallel(verify_tasks(mode, max), jobs);
  std::size_t passed = 0;
  for (const auto& l : lines) {
    out << l.json.dump() << '\n';
    passed += l.pass;
  }
  const std::size_t failed = lines.size() - passed;
  return {{{"mode", mode}, {"checked", lines.size()}, {"passed", passed}, {"failed", failed}}, failed == 0};
}

struct TorusArgs {
  std::string q = "7";
  std::uint64_t p = 3, r = 5;
  std::uint64_t count = 100;
  std::uint64_t seed = 42;
  bool vectors = false;
};

Outcome cmd_torus_params(const TorusArgs& a) {
  return {to_json(torus::derive_params(parse_integer(a.q, "q"), a.p, a.r))};
}

Outcome cmd_torus_roundtrip(const TorusArgs& a) {
  const auto ctx = torus::TorusContext::make(parse_integer(a.q, "q"), a.p, a.r);
  const auto& params = ctx.params();
  const std::uint64_t p = a.p, r = a.r, pr = p * r;
  const Integer PR(static_cast<unsigned long>(pr));
  std::mt19937_64 rng(a.seed);
  std::uint64_t passed = 0, membership_failures = 0;
  Json vectors = Json::array();
  for (std::uint64_t i = 0; i < a.count; ++i) {
    const auto x = gf::random_nonzero(ctx.field_pr(), rng);
    const auto c = torus::decompose(x, params);
    const bool members = gf::torus_membership(c.t1, 1) && gf::torus_membership(c.tp, p) &&
                         gf::torus_membership(c.tr, r) && gf::torus_membership(c.tpr, pr);
    membership_failures += !members;
    const auto back = torus::recombine(c, params);
    const bool ok = members && back == gf::pow(x, PR);
    passed += ok;
    if (a.vectors) {
      vectors.push_back({{"x", to_json(x)}, {"components", to_json(c)}, {"recombined", to_json(back)}, {"pass", ok}});
    }
  }
  Json out = {{"count", a.count},
              {"passed", passed},
              {"failed", a.count - passed},
              {"membership_failures", membership_failures}};
  if (a.vectors) out["vectors"] = std::move(vectors);
  return {std::move(out), passed == a.count};
}

Outcome cmd_torus_theta(const TorusArgs& a) {
  const auto ctx = torus::TorusContext::make(parse_integer(a.q, "q"), a.p, a.r);
  std::mt19937_64 rng(a.seed);
  std::vector<torus::ThetaInput> samples;
  for (std::uint64_t i = 0; i < a.count; ++i) samples.push_back(torus::random_theta_input(ctx, rng));
  const auto dims = torus::theta_dimensions(ctx.params().pair);
  const auto k = torus::measure_kernel_power(samples, ctx);
  Json out = {{"count", a.count}, {"dimensions", to_json(dims)}};
  out["kernel_power_exponent"] = k ? Json(*k) : Json(nullptr);
  if (a.vectors && !samples.empty()) {
    const auto img = torus::theta(samples.front(), ctx);
    out["first"] = {{"x", to_json(samples.front().x)},
                    {"xp", to_json(samples.front().xp)},
                    {"xr", to_json(samples.front().xr)},
                    {"x1", to_json(img.x1)},
                    {"xpr", to_json(img.xpr)}};
  }
  return {std::move(out), k.has_value() && dims.domain_dim == dims.codomain_dim};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cyclotomic arithmetic and torus decomposition"};
  app.require_subcommand(1);
  app.fallthrough();
  bool no_timing = false, pretty = false;
  app.add_flag("--no-timing", no_timing, "Report elapsed_ms as 0 for byte-stable output");
  app.add_flag("--pretty", pretty, "Indent the envelope");

  std::uint64_t m = 0, n = 0;
  std::string q_text;
  auto* phi = app.add_subcommand("phi", "Coefficients of Phi_n");
  phi->add_option("n", n, "Index")->required();
  auto* res = app.add_subcommand("res", "Res(Phi_m, Phi_n), generic and closed form");
  res->add_option("m", m, "First index")->required();
  res->add_option("n", n, "Second index")->required();
  auto* inv = app.add_subcommand("inv", "Phi_m^{-1} mod Phi_n");
  inv->add_option("m", m, "Inverted index")->required();
  inv->add_option("n", n, "Modulus index")->required();
  auto* eval = app.add_subcommand("eval", "Phi_n(q)");
  eval->add_option("n", n, "Index")->required();
  eval->add_option("q", q_text, "Integer point")->required();

  std::string mode;
  std::uint64_t max = 13, ceiling = kDefaultVerifyCeiling;
  unsigned jobs = 0;
  auto* verify = app.add_subcommand("verify", "Sweep a family of checks, one JSON line per instance");
  verify->add_option("--mode", mode, "Family to check")
      ->required()
      ->check(CLI::IsMember({"theorem1", "resultants", "lamleung", "alternation"}));
  verify->add_option("--max", max, "Prime bound (index bound for resultants)")->capture_default_str();
  verify->add_option("--ceiling", ceiling, "Largest accepted --max")->capture_default_str();
  verify->add_option("--jobs", jobs, "Worker threads, 0 for one per core")->capture_default_str();

  TorusArgs targs;
  std::string torus_mode;
  auto* tor = app.add_subcommand("torus", "Torus parameters, round trips and the theta map");
  tor->add_option("action", torus_mode, "params | roundtrip | theta-demo")
      ->required()
      ->check(CLI::IsMember({"params", "roundtrip", "theta-demo"}));
  tor->add_option("--q", targs.q, "Prime q, or 0 for symbolic params")->capture_default_str();
  tor->add_option("--p", targs.p, "First prime")->capture_default_str();
  tor->add_option("--r", targs.r, "Second prime")->capture_default_str();
  tor->add_option("--count", targs.count, "Number of seeded samples")->capture_default_str();
  tor->add_option("--seed", targs.seed, "RNG seed")->capture_default_str();
  tor->add_flag("--vectors", targs.vectors, "Include test vectors in the result");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Json envelope;
  Outcome outcome;
  try {
    if (phi->parsed()) {
      envelope = {{"command", "phi"}, {"params", {{"n", n}}}};
      outcome = cmd_phi(n);
    } else if (res->parsed()) {
      envelope = {{"command", "res"}, {"params", {{"m", m}, {"n", n}}}};
      outcome = cmd_res(m, n);
    } else if (inv->parsed()) {
      envelope = {{"command", "inv"}, {"params", {{"m", m}, {"n", n}}}};
      outcome = cmd_inv(m, n);
    } else if (eval->parsed()) {
      envelope = {{"command", "eval"}, {"params", {{"n", n}, {"q", q_text}}}};
      outcome = cmd_eval(n, q_text);
    } else if (verify->parsed()) {
      envelope = {{"command", "verify"}, {"params", {{"mode", mode}, {"max", max}, {"ceiling", ceiling}}}};
      outcome = cmd_verify(mode, max, ceiling, jobs, out);
    } else {
      envelope = {{"command", "torus " + torus_mode},
                  {"params",
                   {{"q", targs.q}, {"p", targs.p}, {"r", targs.r}, {"count", targs.count}, {"seed", targs.seed}}}};
      if (torus_mode == "params") {
        outcome = cmd_torus_params(targs);
      } else if (torus_mode == "roundtrip") {
        outcome = cmd_torus_roundtrip(targs);
      } else {
        outcome = cmd_torus_theta(targs);
      }
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const TheoremViolation& e) {
    err << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  }

  const double ms =
      no_timing ? 0.0 : std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  envelope["result"] = std::move(outcome.result);
  envelope["elapsed_ms"] = ms;
  out << (pretty ? envelope.dump(2) : envelope.dump()) << '\n';
  return outcome.ok ? kOk : kCheckFailed;
}

}  // namespace cyclotorus::cli
