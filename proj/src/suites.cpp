#include "hilbfock/suites.hpp"

#include <chrono>
#include <random>

#include "hilbfock/chern.hpp"
#include "hilbfock/dsl.hpp"
#include "hilbfock/verify.hpp"
#include "hilbfock/virasoro_module.hpp"
#include "hilbfock/yin.hpp"

namespace hilbfock {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

struct Collector {
  std::vector<VerificationCertificate> certs;
  std::string surface;
  bool synthetic = false;

  void push(const std::string& id, json params, json bounds, const CheckResult& r,
            long long ms, const std::string& note = "") {
    VerificationCertificate c;
    c.identity = id;
    c.params = std::move(params);
    c.bounds = std::move(bounds);
    c.surface = surface;
    c.synthetic = synthetic;
    c.pass = r.pass;
    c.method = r.method;
    if (!r.residual.empty()) c.residual.push_back(r.residual);
    c.note = note.empty() ? r.note : note;
    c.millis = ms;
    certs.push_back(std::move(c));
  }
};

template <class Fn>
CheckResult timed(Fn&& fn, long long& ms) {
  auto t0 = Clock::now();
  CheckResult r = fn();
  ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  return r;
}

std::vector<int> nonzero_modes(int bound) {
  std::vector<int> v;
  for (int n = -bound; n <= bound; ++n)
    if (n != 0) v.push_back(n);
  return v;
}

std::vector<int> all_modes(int bound) {
  std::vector<int> v;
  for (int n = -bound; n <= bound; ++n) v.push_back(n);
  return v;
}

SurfaceDatum k3_synthetic(int b) {
  SurfaceConfig cfg;
  cfg.mode = SurfaceMode::K3Chow;
  cfg.picard_rank = 1;
  cfg.picard_gram = {{Rat(2)}};
  cfg.b = b;
  return make_surface(cfg);
}

void suite_heisenberg(Collector& out, const RunConfig& cfg, const SurfaceDatum& d) {
  for (int n : nonzero_modes(cfg.max_mode))
    for (int np : nonzero_modes(cfg.max_mode))
      for (int gi = 0; gi < d.dim; ++gi)
        for (int gj = 0; gj < d.dim; ++gj) {
          long long ms = 0;
          CheckResult r =
              timed([&] { return check_heis(n, np, gi, gj, cfg.max_weight, d); }, ms);
          out.push("heis",
                   {{"n", n}, {"n2", np}, {"gamma", d.basis_name(gi)}, {"gamma2", d.basis_name(gj)}},
                   {{"max_weight", cfg.max_weight}}, r, ms);
        }
}

void suite_virasoro(Collector& out, const RunConfig& cfg, const SurfaceDatum& d) {
  json bounds = {{"max_weight", cfg.max_weight}};
  // The Euler-class identities pin e = 24c, which a synthetic k3-chow datum
  // (rho + b != 22) cannot satisfy; only the transcendental-diagonal family
  // runs there. Split data derive e from the Kunneth model, so they qualify.
  bool honest_e = !(d.mode == SurfaceMode::K3Chow && d.synthetic);
  if (honest_e) {
    for (int n : all_modes(cfg.max_mode))
      for (int np : nonzero_modes(cfg.max_mode)) {
        long long ms = 0;
        CheckResult r = timed([&] { return check_heis_vir(n, np, cfg.max_weight, d); }, ms);
        out.push("heis-vir", {{"n", n}, {"n2", np}}, bounds, r, ms);
      }
  }
  for (int n : all_modes(cfg.max_mode))
    for (int np : all_modes(cfg.max_mode)) {
      long long ms = 0;
      if (honest_e) {
        CheckResult r = timed([&] { return check_vir_vir(n, np, cfg.max_weight, d); }, ms);
        out.push("vir-vir", {{"n", n}, {"n2", np}}, bounds, r, ms);
      }
      CheckResult r2 = timed([&] { return check_vir_central(n, np, cfg.max_weight, d); }, ms);
      out.push("vir-central-b", {{"n", n}, {"n2", np}, {"b", d.b}}, bounds, r2, ms);
    }
}

void suite_commute(Collector& out, const RunConfig& cfg, const SurfaceDatum& d) {
  for (int n : all_modes(cfg.max_mode))
    for (int m : nonzero_modes(cfg.max_mode))
      for (int gi = 0; gi < d.dim; ++gi) {
        if (!d.in_rs(gi)) continue;
        long long ms = 0;
        CheckResult r = timed([&] { return check_commute(n, m, gi, cfg.max_weight, d); }, ms);
        out.push("commute", {{"n", n}, {"m", m}, {"gamma", d.basis_name(gi)}},
                 {{"max_weight", cfg.max_weight}}, r, ms);
      }
}

void suite_lqw(Collector& out, const RunConfig& cfg, const SurfaceDatum& d) {
  if (!d.t_is_zero()) throw std::invalid_argument("J/G(k>=4) require c_1 = 0");
  LqwEngine engine(d, cfg.lqw_weight);
  json bounds = {{"weight", cfg.lqw_weight}, {"mode", cfg.lqw_mode}};
  for (int rel = 2; rel <= 5; ++rel)
    for (int n : all_modes(cfg.lqw_mode))
      for (int np : all_modes(cfg.lqw_mode)) {
        long long ms = 0;
        CheckResult r = timed([&] { return engine.rel(rel, n, np); }, ms);
        out.push("lqw-" + std::to_string(rel), {{"n", n}, {"n2", np}}, bounds, r, ms);
      }
  for (int sign : {+1, -1})
    for (int k = 0; k <= 3; ++k) {
      long long ms = 0;
      CheckResult r = timed([&] { return engine.special4(sign, k); }, ms);
      out.push("lqw-special-4", {{"sign", sign}, {"k", k}}, bounds, r, ms);
    }
  // k = 0 degenerates (the right side would need J_0^{-1}; that instance is
  // the k-trace of the plain Heisenberg relation, covered by lqw-2)
  for (int k = 1; k <= 3; ++k)
    for (int a = 0; a <= k; ++a) {
      long long ms = 0;
      CheckResult r = timed([&] { return engine.special5(a, k); }, ms);
      out.push("lqw-special-5", {{"a", a}, {"k", k}}, bounds, r, ms);
    }
  for (int k : {1, 2}) {
    long long ms = 0;
    CheckResult r = timed([&] { return check_formula_j(k, cfg.lqw_weight, d); }, ms);
    out.push("formula-j", {{"k", k}}, bounds, r, ms);
  }
}

void suite_omega(Collector& out, const RunConfig& cfg, const SurfaceDatum& d) {
  if (!d.t_is_zero()) throw std::invalid_argument("J/G(k>=4) require c_1 = 0");
  LqwEngine engine(d, cfg.lqw_weight);
  json bounds = {{"weight", cfg.lqw_weight}, {"mode", cfg.lqw_mode}};
  std::map<std::array<int, 4>, OmegaResult> found;
  for (int k = 0; k <= 3; ++k)
    for (int kp = 0; kp <= 3; ++kp) {
      if (k + kp < 3 || k + kp > 5) continue;
      for (int n : all_modes(cfg.lqw_mode))
        for (int np : all_modes(cfg.lqw_mode)) {
          long long ms = 0;
          OmegaResult r;
          auto t0 = Clock::now();
          r = engine.omega(n, np, k, kp);
          ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
          found[{n, np, k, kp}] = r;
          CheckResult c;
          c.pass = r.structural_ok;
          c.method = "evaluated(weight<=" + std::to_string(cfg.lqw_weight) + ")";
          c.residual = r.residual;
          c.note = r.base_zero ? "derived; target operator vanishes on the window"
                               : "derived; omega = " + r.omega.str();
          out.push("omega", {{"n", n}, {"n2", np}, {"k", k}, {"k2", kp}}, bounds, c, ms);
        }
    }
  for (auto& [key, r] : found) {
    auto [n, np, k, kp] = key;
    auto it = found.find(std::array<int, 4>{np, n, kp, k});
    if (it == found.end()) continue;
    CheckResult c;
    c.pass = r.structural_ok && it->second.structural_ok && (r.omega == -it->second.omega);
    c.method = "exact";
    if (!c.pass) c.residual = r.omega.str() + " vs " + it->second.omega.str();
    out.push("omega-antisym", {{"n", n}, {"n2", np}, {"k", k}, {"k2", kp}}, bounds, c, 0);
  }
}

void suite_decompose(Collector& out, const RunConfig& cfg, const SurfaceDatum& d) {
  if (d.mode != SurfaceMode::K3Chow)
    throw std::invalid_argument("decompose suite requires a k3-chow datum");
  for (int k : {2, 3, 4})
    for (int gi = 0; gi < d.dim; ++gi) {
      long long ms = 0;
      DecompositionResult r;
      auto t0 = Clock::now();
      r = decompose_G(k, gi, cfg.max_weight, d);
      ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
      CheckResult c = r.cert;
      c.note = "words: " + r.printed;
      out.push("decompose-G", {{"k", k}, {"gamma", d.basis_name(gi)}},
               {{"max_weight", cfg.max_weight}}, c, ms);
    }
}

void suite_oioi(Collector& out, const RunConfig& cfg, const SurfaceDatum& d) {
  int bound = std::min(cfg.max_mode, 3);
  for (int m : nonzero_modes(bound))
    for (int n : nonzero_modes(bound)) {
      for (int k : nonzero_modes(bound))
        for (int gi = 0; gi < d.dim; ++gi) {
          if (!d.in_rs(gi)) continue;
          long long ms = 0;
          CheckResult r = timed([&] { return check_oi(m, n, k, gi, cfg.max_weight, d); }, ms);
          out.push("oi", {{"m", m}, {"n", n}, {"k", k}, {"gamma", d.basis_name(gi)}},
                   {{"max_weight", cfg.max_weight}}, r, ms);
        }
      for (int mp : nonzero_modes(bound))
        for (int np : nonzero_modes(bound)) {
          long long ms = 0;
          CheckResult r = timed([&] { return check_oioi(m, n, mp, np, cfg.max_weight, d); }, ms);
          out.push("oioi", {{"m", m}, {"n", n}, {"m2", mp}, {"n2", np}},
                   {{"max_weight", cfg.max_weight}}, r, ms);
        }
    }
}

void suite_prop2(Collector& out, const RunConfig& cfg, const SurfaceDatum& d) {
  for (int m : nonzero_modes(cfg.max_mode)) {
    long long ms = 0;
    CheckResult r = timed([&] { return check_prop2_a(m, cfg.max_weight, d); }, ms);
    out.push("prop2-chain", {{"part", "a"}, {"m", m}}, {{"max_weight", cfg.max_weight}}, r, ms);
    for (int n : nonzero_modes(cfg.max_mode)) {
      CheckResult r2 = timed([&] { return check_prop2_b(m, n, cfg.max_weight, d); }, ms);
      out.push("prop2-chain", {{"part", "b"}, {"m", m}, {"n", n}},
               {{"max_weight", cfg.max_weight}}, r2, ms);
    }
  }
}

void suite_sp(Collector& out, const RunConfig& cfg, const SurfaceDatum& d) {
  long long ms = 0;
  CheckResult r = timed([&] { return verify_sp_relations(cfg.sp_n); }, ms);
  out.push("sp-rel-matrix", {{"N", cfg.sp_n}}, {{"N", cfg.sp_n}}, r, ms);
  int bound = std::min(cfg.max_mode, 3);
  int W = std::min(cfg.max_weight, 6);
  for (int m : nonzero_modes(bound))
    for (int n : nonzero_modes(bound)) {
      for (int mp : nonzero_modes(bound))
        for (int np : nonzero_modes(bound)) {
          CheckResult r2 = timed([&] { return check_sp_rel_D(m, n, mp, np, W, d); }, ms);
          out.push("sp-rel-D", {{"m", m}, {"n", n}, {"m2", mp}, {"n2", np}}, {{"weight", W}}, r2,
                   ms);
        }
      CheckResult r3 = timed([&] { return check_oioi_tr(m, n, -m, -n, W, d); }, ms);
      out.push("oioi-tr", {{"m", m}, {"n", n}, {"m2", -m}, {"n2", -n}}, {{"weight", W}}, r3, ms);
    }
  for (int m = 1; m <= bound; ++m) {
    CheckResult r4 = timed([&] { return check_sp_highest(m, d); }, ms);
    out.push("sp-highest", {{"m", m}, {"b", d.b}}, {}, r4, ms);
    CheckResult r5 = timed([&] { return check_tr_reorder(m, W, d); }, ms);
    out.push("tr-reorder", {{"n", m}}, {{"weight", W}}, r5, ms);
  }
}

void suite_yin(Collector& out, const RunConfig&, const SurfaceDatum&) {
  for (int b : {1, 2}) {
    SurfaceDatum dk = k3_synthetic(b);
    long long ms = 0;
    CheckResult r = timed([&] { return yin_annihilation_check(3, 3, dk); }, ms);
    bool keep = out.synthetic;
    out.synthetic = dk.synthetic;
    out.push("yin-annihilation", {{"b", b}, {"index_bound", 3}, {"mode_bound", 3}},
             {{"index_bound", 3}, {"mode_bound", 3}}, r, ms);
    out.synthetic = keep;
  }
}

void suite_gl(Collector& out, const RunConfig& cfg, const SurfaceDatum&) {
  int b = cfg.b > 0 ? cfg.b : 2;
  SurfaceDatum dk = k3_synthetic(b);
  std::vector<std::vector<int>> tuples;
  if (b == 2)
    tuples = {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
  else if (b == 1)
    tuples = {{1, 2}, {1, 3}, {2, 3}};
  else
    throw std::invalid_argument("gl suite supports b in {1,2}");
  for (auto& ms_t : tuples)
    for (auto& ns_t : tuples)
      for (int s = 1; s <= 4; ++s)
        for (int u = 1; u <= 4; ++u) {
          if ((s + u + ms_t[0] + ns_t[0]) % 2) continue;  // thin the grid, keep >= 20 instances
          long long ms = 0;
          CheckResult r = timed([&] { return check_gl_equivariance(s, u, ms_t, ns_t, dk); }, ms);
          json jm = ms_t, jn = ns_t;
          out.push("gl-equivariance", {{"s", s}, {"u", u}, {"m", jm}, {"n", jn}, {"b", b}}, {}, r,
                   ms);
        }
}

void suite_kimura(Collector& out, const RunConfig& cfg, const SurfaceDatum&) {
  auto run_one = [&](int b, int b_model, bool expect_zero, const char* id) {
    long long ms = 0;
    auto t0 = Clock::now();
    KimuraResult r = kimura_check(b, b_model);
    ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    CheckResult c;
    c.pass = (r.zero == expect_zero);
    c.method = "brute force over the symmetric group";
    c.note = r.note;
    if (!c.pass && r.zero != expect_zero)
      c.residual = r.zero ? "vanishes unexpectedly"
                          : std::to_string(r.residual_terms) + " residual terms";
    out.push(id, {{"b", b}, {"b_model", b_model}}, {}, c, ms);
  };
  if (cfg.b_model >= 0) {
    // explicit instance: expectation is vanishing, so a rank mismatch fails
    run_one(cfg.b, cfg.b_model, true, "kimura");
    return;
  }
  for (int b : {1, 2, 3}) run_one(b, b, true, "kimura");
  run_one(2, 3, false, "kimura-control");
}

void suite_shapovalov(Collector& out, const RunConfig& cfg, const SurfaceDatum&) {
  long long ms = 0;
  auto g1 = shapovalov_gram(Rat(2), 1, false);
  CheckResult r1;
  r1.pass = g1.size() == 1 && g1[0][0].is_zero();
  r1.method = "exact Gram";
  r1.note = "level-1 vector of the full module is singular at weight 0";
  out.push("shapovalov-singular-L1", {{"level", 1}}, {}, r1, 0);

  std::vector<int> charges = cfg.b_list;
  if (charges.empty())
    for (int c = 2; c <= 21; ++c) charges.push_back(c);
  auto t0 = Clock::now();
  SingularCheck sc = no_singular_check(charges, cfg.max_level);
  ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  CheckResult r2;
  r2.pass = sc.pass;
  r2.method = "exact Gram determinants";
  r2.note = sc.detail;
  json jb = charges;
  out.push("shapovalov-nonsingular", {{"charges", jb}}, {{"max_level", cfg.max_level}}, r2, ms);
}

void suite_chern(Collector& out, const RunConfig& cfg, const SurfaceDatum&) {
  int D = cfg.chern_degree;
  long long ms = 0;
  CheckResult r1 = timed(
      [&] {
        CheckResult c;
        c.method = "exact series to degree " + std::to_string(std::max(D, 10));
        ChernRing R(std::max(D, 10));
        ChernSeries ch = generic_character(R);
        c.pass = (phi(R, psi(R, ch)) == ch);
        if (!c.pass) c.residual = "phi(psi(ch)) != ch";
        if (c.pass) {
          ChernRing R2(5);
          ChernSeries lc = line_character(R2);
          ChernSeries total = psi(R2, lc);
          ChernPoly mx = R2.symbol(0);
          for (auto& [m, cc] : mx) cc = -cc;
          bool line_ok = total.comp[1] == mx;
          for (int n = 2; n <= 5; ++n) line_ok = line_ok && total.comp[n].empty();
          c.pass = line_ok;
          if (!line_ok) c.residual = "line bundle specialization failed";
        }
        return c;
      },
      ms);
  out.push("chern-phi-psi", {{"degree", std::max(D, 10)}}, {}, r1, ms);

  for (int a = 0; a <= std::min(D, 8); ++a)
    for (int b = 0; b <= std::min(D, 8) - a; ++b) {
      if (a + b < 1) continue;
      CheckResult r = timed(
          [&] {
            ChernCheck cc = claim_identity_check(a, b, std::min(D, 8));
            CheckResult c;
            c.pass = cc.pass;
            c.method = "exact polynomial identity";
            if (!cc.pass) c.residual = cc.detail;
            return c;
          },
          ms);
      out.push("chern-claim", {{"a", a}, {"b", b}}, {{"degree", std::min(D, 8)}}, r, ms);
    }
}

void suite_diagram_oracle(Collector& out, const RunConfig& cfg, const SurfaceDatum&) {
  SurfaceDatum dk = k3_synthetic(2);
  SurfaceConfig scfg;
  scfg.mode = SurfaceMode::Split;
  scfg.picard_rank = 1;
  scfg.picard_gram = {{Rat(2)}};
  scfg.b = 2;
  SurfaceDatum ds = make_surface(scfg);

  long long ms = 0;
  CheckResult bv = timed(
      [&] {
        CheckResult c;
        c.method = "rewrite identities";
        SurfClass one = dk.basis_class(0), l = dk.basis_class(1), pc = dk.basis_class(dk.c_index);
        PolarizedClass delta = diagonal(dk);
        bool ok = true;
        ok = ok && mul_classes(delta, tensor_class({pc, one}, dk), dk) ==
                       tensor_class({pc, pc}, dk);
        ok = ok && mul_classes(delta, tensor_class({one, pc}, dk), dk) ==
                       tensor_class({pc, pc}, dk);
        PolarizedClass bv4 = tensor_class({l, pc}, dk);
        bv4 += tensor_class({pc, l}, dk);
        ok = ok && mul_classes(delta, tensor_class({l, one}, dk), dk) == bv4;
        PolarizedClass tr = zero_class_on(2, dk);
        {
          ClassTerm t;
          t.deco = {ClassTerm::kTr, ClassTerm::kTr};
          t.tr = {{0, 1}};
          tr.add(t, Rat(1));
        }
        ok = ok && mul_classes(tr, tensor_class({one, l}, dk), dk).is_zero();
        ok = ok && mul_classes(tr, tensor_class({pc, one}, dk), dk).is_zero();
        // bv5 equals the n=3 expansion
        PolarizedClass bv5 = zero_class_on(3, dk);
        auto cc3 = [&](int i, int j) {
          std::vector<SurfClass> f(3, one);
          f[i] = pc;
          f[j] = pc;
          PolarizedClass t = tensor_class(f, dk);
          t *= Rat(-1);
          return t;
        };
        bv5 += mul_classes(diagonal_block(3, {0, 1}, one, dk), tensor_class({one, one, pc}, dk), dk);
        bv5 += mul_classes(diagonal_block(3, {0, 2}, one, dk), tensor_class({one, pc, one}, dk), dk);
        bv5 += mul_classes(diagonal_block(3, {1, 2}, one, dk), tensor_class({pc, one, one}, dk), dk);
        bv5 += cc3(0, 1);
        bv5 += cc3(0, 2);
        bv5 += cc3(1, 2);
        ok = ok && bv5 == small_diagonal_expansion(3, dk);
        c.pass = ok;
        if (!ok) c.residual = "rewrite identity failed";
        return c;
      },
      ms);
  out.push("diagram-bv", {}, {}, bv, ms);

  CheckResult r = timed(
      [&] {
        CheckResult c;
        c.method = "randomized split-model oracle";
        std::mt19937_64 rng(20240811);
        auto pick = [&](int n) { return (int)(rng() % (unsigned)n); };
        auto random_class = [&](int k) {
          PolarizedClass rc = zero_class_on(k, dk);
          int nterms = 1 + pick(3);
          for (int t = 0; t < nterms; ++t) {
            ClassTerm term = ClassTerm::units(k);
            std::vector<int> legs(k);
            for (int i = 0; i < k; ++i) legs[i] = i;
            std::shuffle(legs.begin(), legs.end(), rng);
            int npairs = k >= 2 ? pick(k / 2 + 1) : 0;
            int used = 0;
            for (int p = 0; p < npairs; ++p) {
              int a = legs[used++], b2 = legs[used++];
              term.deco[a] = ClassTerm::kTr;
              term.deco[b2] = ClassTerm::kTr;
              term.tr.emplace_back((int8_t)std::min(a, b2), (int8_t)std::max(a, b2));
            }
            for (int i = used; i < k; ++i) term.deco[legs[i]] = (int8_t)pick(dk.dim);
            term.normalize();
            rc.add(term, Rat(pick(9) - 4, 1 + pick(3)));
          }
          return rc;
        };
        for (int it = 0; it < cfg.oracle_count; ++it) {
          int k = 2 + pick(3);
          PolarizedClass a = random_class(k);
          int op = pick(4);
          bool ok = true;
          if (op == 0) {
            PolarizedClass b2 = random_class(k);
            ok = split_of(mul_classes(a, b2, dk), dk, ds) ==
                 mul_classes(split_of(a, dk, ds), split_of(b2, dk, ds), ds);
          } else if (op == 1) {
            int i = pick(k), j = (i + 1 + pick(k - 1)) % k;
            ok = split_of(contract(a, i, j, dk), dk, ds) ==
                 contract(split_of(a, dk, ds), i, j, ds);
          } else if (op == 2) {
            int i = pick(k);
            ok = split_of(integrate(a, {i}, dk), dk, ds) ==
                 integrate(split_of(a, dk, ds), {i}, ds);
          } else {
            ok = split_of(restrict_small_diagonal(a, dk), dk, ds) ==
                 restrict_small_diagonal(split_of(a, dk, ds), ds);
          }
          if (!ok) {
            c.pass = false;
            c.residual = "instance " + std::to_string(it) + " disagreed with the split model";
            return c;
          }
        }
        c.pass = true;
        return c;
      },
      ms);
  out.push("diagram-oracle", {{"instances", cfg.oracle_count}}, {}, r, ms,
           "k <= 4, randomized operations against the split model");
}

}  // namespace

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> names = {
      "heisenberg", "virasoro", "commute", "lqw",        "omega",  "decompose",
      "oioi",       "prop2",    "sp",      "yin",        "gl",     "kimura",
      "shapovalov", "chern",    "diagram-oracle"};
  return names;
}

std::vector<VerificationCertificate> run_suite(const std::string& name, const RunConfig& cfg,
                                               const SurfaceDatum& d,
                                               const std::string& surface_desc) {
  Collector out;
  out.surface = surface_desc;
  out.synthetic = d.synthetic;
  if (name == "heisenberg")
    suite_heisenberg(out, cfg, d);
  else if (name == "virasoro")
    suite_virasoro(out, cfg, d);
  else if (name == "commute")
    suite_commute(out, cfg, d);
  else if (name == "lqw")
    suite_lqw(out, cfg, d);
  else if (name == "omega")
    suite_omega(out, cfg, d);
  else if (name == "decompose")
    suite_decompose(out, cfg, d);
  else if (name == "oioi")
    suite_oioi(out, cfg, d);
  else if (name == "prop2")
    suite_prop2(out, cfg, d);
  else if (name == "sp")
    suite_sp(out, cfg, d);
  else if (name == "yin")
    suite_yin(out, cfg, d);
  else if (name == "gl")
    suite_gl(out, cfg, d);
  else if (name == "kimura")
    suite_kimura(out, cfg, d);
  else if (name == "shapovalov")
    suite_shapovalov(out, cfg, d);
  else if (name == "chern")
    suite_chern(out, cfg, d);
  else if (name == "diagram-oracle")
    suite_diagram_oracle(out, cfg, d);
  else
    throw std::invalid_argument("unknown suite '" + name + "'");
  return out.certs;
}

}  // namespace hilbfock
