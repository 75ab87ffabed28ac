// bootstrap.cpp - Planning and validation of bootstrap certificates
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include "regula/bootstrap.hpp"

#include <stdexcept>
#include <string>

namespace regula {

namespace {

constexpr long kMaxChain = 100000;

struct PlanError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ExtRational two_pow_inv(int j) {  // 1/2^j, exact
  return ExtRational(BigRational(BigInt(1), BigInt(1) << j));
}

/// Accumulates a certificate while enforcing every step invariant as it is
/// emitted, so a planning attempt fails fast with the violated inequality.
class Builder {
public:
  Builder(const SystemParams& w, CaseTag tag, bool swapped) : w_(w) {
    pc_ = w.critical();
    pcc_ = w.conj_critical();
    gap_ = w.gap();
    cert_.params = w;
    cert_.selected.case_tag = tag;
    cert_.selected.swapped = swapped;
  }

  const SystemParams& work() const { return w_; }
  const ExtRational& pc() const { return pc_; }
  const ExtRational& pcc() const { return pcc_; }
  const ExtRational& gap() const { return gap_; }
  SelectedParameters& selected() { return cert_.selected; }

  void add_base(Func f, const ExtRational& e) {
    if (!(e >= ExtRational(1) && e < pc_))
      throw PlanError("base exponent outside [1, p_c)");
    cert_.base.push_back(BaseEntry{f, e});
    bump(f, e);
  }

  void emit(Equation eq, const ExtRational& u_e, const ExtRational& v_e,
            const ExtRational& result) {
    const ExtRational one(1);
    const auto& avu = avail(Func::U);
    const auto& avv = avail(Func::V);
    if (!avu || u_e > *avu) throw PlanError("u-exponent not established");
    if (!avv || v_e > *avv) throw PlanError("v-exponent not established");
    if (u_e < one || v_e < one) throw PlanError("exponent below 1");

    ExtRational rho_inv = eq == Equation::First ? w_.r / u_e + w_.p / v_e
                                                : w_.q / u_e + w_.s / v_e;
    if (rho_inv > one) throw PlanError("Holder combination exceeds 1");
    ExtRational pure_inv = eq == Equation::First ? w_.gamma / u_e : w_.sigma / v_e;
    if (pure_inv > one) throw PlanError("pure power exceeds the source space");
    ExtRational rho =
        rho_inv.is_zero() ? ExtRational::infinity() : rho_inv.reciprocal();
    ExtRational pure =
        pure_inv.is_zero() ? ExtRational::infinity() : pure_inv.reciprocal();
    ExtRational h_cap = min(min(rho, pure), w_.theta);
    if (result < one) throw PlanError("result exponent below 1");
    ExtRational lhs = h_cap.reciprocal() - result.reciprocal();
    ExtRational margin = gap_ - lhs;
    if (!(margin.sign() > 0)) throw PlanError("smoothing margin not positive");
    if (result.is_infinite() && !(h_cap > pcc_))
      throw PlanError("final step requires source exponent > p'_c");

    Func target = eq == Equation::First ? Func::U : Func::V;
    cert_.steps.push_back(Step{eq, target, u_e, v_e, std::move(rho),
                               std::move(pure), std::move(h_cap), result,
                               std::move(margin)});
    bump(target, result);
  }

  Certificate finish() {
    if (!(u_inf_ && v_inf_))
      throw PlanError("chain did not reach the supremum norm for both components");
    cert_.terminal = true;
    return std::move(cert_);
  }

private:
  std::optional<ExtRational>& avail(Func f) {
    return f == Func::U ? avail_u_ : avail_v_;
  }

  void bump(Func f, const ExtRational& e) {
    auto& a = avail(f);
    if (!a || *a < e) a = e;
    if (e.is_infinite()) (f == Func::U ? u_inf_ : v_inf_) = true;
  }

  const SystemParams& w_;
  ExtRational pc_, pcc_, gap_;
  Certificate cert_;
  std::optional<ExtRational> avail_u_, avail_v_;
  bool u_inf_ = false, v_inf_ = false;
};

/// Drives one component to infinity on its own equation, the other component
/// held at `other_exp` (typically inf). The iterate halves the slack between
/// the current exponent and the best the smoothing estimate allows.
void finish_scalar(Builder& b, Equation eq, const ExtRational& other_exp,
                   ExtRational cur) {
  const SystemParams& w = b.work();
  const ExtRational two(2);
  for (long iter = 0; iter < kMaxChain; ++iter) {
    ExtRational rho_inv = eq == Equation::First ? w.r / cur + w.p / other_exp
                                                : w.q / other_exp + w.s / cur;
    ExtRational pure_inv = eq == Equation::First ? w.gamma / cur : w.sigma / cur;
    ExtRational cap_inv = max(rho_inv, pure_inv);
    if (cap_inv < b.gap()) {
      if (eq == Equation::First)
        b.emit(eq, cur, other_exp, ExtRational::infinity());
      else
        b.emit(eq, other_exp, cur, ExtRational::infinity());
      return;
    }
    ExtRational floor_inv = cap_inv - b.gap();
    ExtRational cur_inv = cur.reciprocal();
    if (!(floor_inv < cur_inv))
      throw PlanError("scalar chain cannot escape: growth too close to critical");
    ExtRational next = ((floor_inv + cur_inv) / two).reciprocal();
    if (eq == Equation::First)
      b.emit(eq, cur, other_exp, next);
    else
      b.emit(eq, other_exp, cur, next);
    cur = std::move(next);
  }
  throw PlanError("scalar chain exceeded the step cap");
}

/// v-finish with a fresh base exponent below p_c.
void finish_second_with_base(Builder& b, const ExtRational& u_at) {
  const SystemParams& w = b.work();
  const ExtRational one(1), two(2);
  ExtRational lower_v = max(max(w.s, w.sigma), one);
  ExtRational kv = b.pc().is_finite() ? (lower_v + b.pc()) / two : lower_v + one;
  b.add_base(Func::V, kv);
  finish_scalar(b, Equation::Second, u_at, kv);
}

Certificate plan_case1(const SystemParams& w, bool swapped) {
  const ExtRational one(1), two(2);
  const ExtRational pc = w.critical();
  const ExtRational pcc = w.conj_critical();
  const ExtRational gap = w.gap();
  const ExtRational lower = max(max(w.p + w.r, w.gamma), w.p * pcc);
  const ExtRational k = pc.is_finite() ? (lower + pc) / two : lower + one;
  std::string last = "no attempt";

  if (w.r < one) {
    const ExtRational thr = case1_exit_threshold(w, k);
    const ExtRational eps0 = pc.is_finite() ? (pc - k) / two : one;
    for (int j = 0; j <= 64; ++j) {
      const ExtRational eps = eps0 * two_pow_inv(j);
      try {
        Builder b(w, CaseTag::I, swapped);
        b.selected().k = k;
        b.selected().epsilon = eps;
        b.add_base(Func::U, k);
        b.add_base(Func::V, k);
        long m0 = 0;
        if (thr.is_infinite()) throw PlanError("chain has no exit threshold");
        if (k <= thr) {
          ExtRational ratio = (thr - k) / eps;  // smallest m with k + m*eps > thr
          BigInt fl = ratio.numerator() / ratio.denominator();
          if (fl >= kMaxChain) throw PlanError("arithmetic chain exceeds the step cap");
          m0 = fl.convert_to<long>() + 1;
        }
        ExtRational ue = k;
        for (long m = 1; m <= m0; ++m) {
          ExtRational nxt = k + eps * ExtRational(static_cast<long long>(m));
          b.emit(Equation::First, ue, k, nxt);
          ue = std::move(nxt);
        }
        b.emit(Equation::First, ue, k, ExtRational::infinity());
        finish_second_with_base(b, ExtRational::infinity());
        return b.finish();
      } catch (const PlanError& e) {
        last = e.what();
      }
    }
  } else {
    ExtRational W = max(w.r + w.p, w.gamma) / k - gap;
    ExtRational eta0 = two;
    if (W.sign() > 0) {
      ExtRational etamax = (k * W).reciprocal();  // > 1 since max(p+r,gamma) < p_c
      if (etamax < ExtRational(3)) eta0 = (one + etamax) / two;
    }
    for (int j = 0; j <= 64; ++j) {
      const ExtRational eta = one + (eta0 - one) * two_pow_inv(j);
      try {
        Builder b(w, CaseTag::I, swapped);
        b.selected().k = k;
        b.selected().eta = eta;
        b.add_base(Func::U, k);
        b.add_base(Func::V, k);
        ExtRational ue = k;
        for (long iter = 0;; ++iter) {
          if (iter > kMaxChain) throw PlanError("geometric chain exceeded the step cap");
          ExtRational rho_inv = w.r / ue + w.p / k;
          ExtRational pure_inv = w.gamma / ue;
          if (max(rho_inv, pure_inv) < gap) break;
          ExtRational nxt = eta * ue;
          b.emit(Equation::First, ue, k, nxt);
          ue = std::move(nxt);
        }
        b.emit(Equation::First, ue, k, ExtRational::infinity());
        finish_second_with_base(b, ExtRational::infinity());
        return b.finish();
      } catch (const PlanError& e) {
        last = e.what();
      }
    }
  }
  throw std::logic_error("bootstrap planning failed for a certified tuple (Case I): " + last);
}

Certificate plan_case2(const SystemParams& w, bool swapped) {
  const ExtRational one(1), two(2);
  const ExtRational pc = w.critical();  // finite in Case II
  const ExtRational gap = w.gap();

  ExtRational lower_v = max(max(w.s, w.sigma), one);
  ExtRational kv = (lower_v + pc) / two;
  // k1 large enough that the second-equation chain starts and escapes:
  // q/k1 below both the smoothing headroom and the Holder headroom at kv.
  ExtRational d_escape = gap - max(w.s - one, ExtRational(0)) / kv;
  ExtRational d_holder = one - w.s / kv;
  ExtRational k1t = two * max(max(w.q / d_escape, w.q / d_holder), pc);
  ExtRational target = two * k1t;

  ExtRational lower_u = max(max(w.p + w.r, w.gamma), one);
  ExtRational delta_cap =
      (one - w.r) * lower_u * pc / (two * target * (pc - one));
  ExtRational ku = pc - min((pc - lower_u) / two, delta_cap);

  std::string last = "no attempt";
  ExtRational taumin = max(w.r, w.r * target / (ku + w.r * (target - ku)));
  for (int jt = 0; jt <= 64; ++jt) {
    ExtRational tau = one - (one - taumin) * two_pow_inv(jt + 1);
    try {
      Builder b(w, CaseTag::II, swapped);
      b.selected().k = ku;
      b.selected().tau = tau;
      b.add_base(Func::U, ku);
      b.add_base(Func::V, ku);
      ExtRational e = ku, pw = one;
      for (long iter = 0; e < k1t; ++iter) {
        if (iter > kMaxChain) throw PlanError("contraction chain exceeded the step cap");
        pw = pw * tau;
        ExtRational nxt = target - pw * (target - ku);
        b.emit(Equation::First, e, ku, nxt);
        e = std::move(nxt);
      }
      b.selected().k1 = e;
      finish_second_with_base(b, e);
      finish_scalar(b, Equation::First, ExtRational::infinity(), e);
      return b.finish();
    } catch (const PlanError& ex) {
      last = ex.what();
    }
  }
  throw std::logic_error("bootstrap planning failed for a certified tuple (Case II): " + last);
}

Certificate plan_case3(const SystemParams& w, bool swapped) {
  const ExtRational one(1), two(2);
  const ExtRational pc = w.critical();  // finite in Case III
  const ExtRational gap = w.gap();
  const ExtRational kstar = (one - w.r) * pc / (w.p + one - pc);
  const ExtRational lower_u =
      max(max(max(w.p + w.r, w.gamma), max(w.sigma, w.s)), one);

  std::string last = "no attempt";
  for (int j = 0; j <= 64; ++j) {
    // k1 halves toward k*, k approaches p_c twice as fast: the first-equation
    // alternate bound is tight at (k1, k, eta) = (k*, p_c, 1) and needs the
    // k-clearance to vanish faster than the k1-clearance.
    ExtRational delta1 = (kstar - pc) * two_pow_inv(j + 1);
    ExtRational k1 = kstar - delta1;
    ExtRational k = pc - (pc - lower_u) * two_pow_inv(2 * (j + 1));
    if (!(w.q / k1 + w.s / k < one)) {
      last = "alternate chain needs q/k1 + s/k < 1";
      continue;
    }

    // Exact feasible interval for x = 1/eta in (0,1).
    ExtRational a27 = w.p / k - k1.reciprocal();
    ExtRational b27 = gap - w.r / k1;
    ExtRational xlb(0);
    std::optional<ExtRational> xub;
    bool feasible27 = true;
    if (a27.sign() > 0) {
      if (b27.sign() <= 0) feasible27 = false;
      else xub = b27 / a27;
    } else if (a27.is_zero()) {
      feasible27 = b27.sign() > 0;
    } else if (b27.sign() < 0) {
      xlb = max(xlb, b27 / a27);
    }
    if (!feasible27) {
      last = "first-equation alternate bound infeasible";
      continue;
    }
    xlb = max(xlb, (w.q / k1 + w.s / k - gap) * k);
    xlb = max(xlb, w.gamma - gap * k1);
    xlb = max(xlb, w.sigma - gap * k);
    ExtRational xtop = xub ? min(*xub, one) : one;
    if (!(xlb < xtop)) {
      last = "no geometric ratio satisfies the alternate bounds";
      continue;
    }
    ExtRational eta = ((xlb + xtop) / two).reciprocal();

    ExtRational target = kstar - delta1 / two;
    if (!(w.r / target + w.p / k - target.reciprocal() < gap)) {
      last = "contraction target bound";
      continue;
    }
    ExtRational taumin =
        max(w.r, w.r * target / (k + w.r * (target - k)));
    for (int jt = 0; jt <= 64; ++jt) {
      ExtRational tau = one - (one - taumin) * two_pow_inv(jt + 1);
      try {
        Builder b(w, CaseTag::III, swapped);
        b.selected().k = k;
        b.selected().k1 = k1;
        b.selected().epsilon = delta1 / two;  // k* clearance of the target
        b.selected().tau = tau;
        b.selected().eta = eta;
        b.add_base(Func::U, k);
        b.add_base(Func::V, k);
        ExtRational e = k, pw = one;
        for (long iter = 0; e < k1; ++iter) {
          if (iter > kMaxChain) throw PlanError("contraction chain exceeded the step cap");
          pw = pw * tau;
          ExtRational nxt = target - pw * (target - k);
          b.emit(Equation::First, e, k, nxt);
          e = std::move(nxt);
        }
        ExtRational um = k1, vm = k;
        for (long rounds = 0;; ++rounds) {
          if (rounds > kMaxChain) throw PlanError("alternate chain exceeded the step cap");
          ExtRational rho2 = w.q / um + w.s / vm;
          ExtRational pure2 = w.sigma / vm;
          if (max(rho2, pure2) < gap) {
            b.emit(Equation::Second, um, vm, ExtRational::infinity());
            finish_scalar(b, Equation::First, ExtRational::infinity(), um);
            break;
          }
          ExtRational vnext = eta * vm;
          ExtRational mu = w.r / um + w.p / vnext;
          ExtRational nu = w.gamma / um;
          if (max(mu, nu) < gap) {
            b.emit(Equation::Second, um, vm, vnext);
            b.emit(Equation::First, um, vnext, ExtRational::infinity());
            finish_scalar(b, Equation::Second, ExtRational::infinity(), vnext);
            break;
          }
          b.emit(Equation::Second, um, vm, vnext);
          b.emit(Equation::First, um, vnext, eta * um);
          um = eta * um;
          vm = std::move(vnext);
        }
        return b.finish();
      } catch (const PlanError& ex) {
        last = ex.what();
      }
    }
  }
  throw std::logic_error("bootstrap planning failed for a certified tuple (Case III): " + last);
}

}  // namespace

CaseTag case_of(const SystemParams& params) {
  ExtRational pc = params.critical();
  if (pc.is_infinite()) return CaseTag::I;
  ExtRational edge = pc - ExtRational(1);  // = p_c / p'_c exactly
  if (params.p < edge) return CaseTag::I;
  if (params.p == edge) return CaseTag::II;
  return CaseTag::III;
}

ExtRational case1_exit_threshold(const SystemParams& params, const ExtRational& k) {
  ExtRational thr = params.gamma * params.conj_critical();
  if (params.r.sign() > 0) {
    ExtRational headroom = params.gap() - params.p / k;
    if (headroom.sign() <= 0) return ExtRational::infinity();
    thr = max(thr, params.r / headroom);
  }
  return thr;
}

Certificate plan(const SystemParams& params) {
  auto [verdict, report] = classify(params);
  (void)report;
  if (!verdict.certified())
    throw std::domain_error(
        std::string("bootstrap planning requires a certified tuple; classification is ") +
        verdict_name(verdict.kind));

  bool swapped = params.q + params.s < params.p + params.r;
  SystemParams w = swapped ? params.swapped() : params;
  Certificate cert;
  switch (case_of(w)) {
    case CaseTag::I: cert = plan_case1(w, swapped); break;
    case CaseTag::II: cert = plan_case2(w, swapped); break;
    case CaseTag::III: cert = plan_case3(w, swapped); break;
  }
  ValidationReport rep = validate(cert);
  if (!rep.ok)
    throw std::logic_error("planned certificate failed validation: " +
                           rep.first_violation->what);
  return cert;
}

SelectedParameters select_parameters(const SystemParams& params) {
  return plan(params).selected;
}

ValidationReport validate(const Certificate& cert, ValidateOptions opts) {
  ValidationReport rep;
  auto violate = [&](int step, std::string what) {
    rep.ok = false;
    rep.first_violation = Violation{step, std::move(what)};
  };

  const SystemParams& w = cert.params;
  const ExtRational one(1);
  const ExtRational pc = w.critical();
  const ExtRational pcc = w.conj_critical();
  const ExtRational gap = w.gap();

  std::optional<ExtRational> avail_u, avail_v;
  bool u_inf = false, v_inf = false;
  auto bump = [&](Func f, const ExtRational& e) {
    auto& a = f == Func::U ? avail_u : avail_v;
    if (!a || *a < e) a = e;
    if (e.is_infinite()) (f == Func::U ? u_inf : v_inf) = true;
  };

  for (const BaseEntry& b : cert.base) {
    if (!(b.exponent >= one && b.exponent < pc)) {
      violate(-1, "base exponent must satisfy 1 <= k < p_c");
      return rep;
    }
    bump(b.func, b.exponent);
  }

  for (size_t i = 0; i < cert.steps.size(); ++i) {
    const Step& st = cert.steps[i];
    const int idx = static_cast<int>(i);
    const bool first = st.equation == Equation::First;
    if ((first && st.target != Func::U) || (!first && st.target != Func::V)) {
      violate(idx, "step equation and target disagree");
      return rep;
    }
    if (st.u_exp < one || st.v_exp < one) {
      violate(idx, "controlled exponent below 1");
      return rep;
    }
    if (!avail_u || st.u_exp > *avail_u) {
      violate(idx, "u-exponent not established by base or earlier steps");
      return rep;
    }
    if (!avail_v || st.v_exp > *avail_v) {
      violate(idx, "v-exponent not established by base or earlier steps");
      return rep;
    }

    ExtRational rho_inv = first ? w.r / st.u_exp + w.p / st.v_exp
                                : w.q / st.u_exp + w.s / st.v_exp;
    if (opts.strict_holder ? !(rho_inv < one) : !(rho_inv <= one)) {
      violate(idx, "Holder combination exceeds 1");
      return rep;
    }
    ExtRational rho =
        rho_inv.is_zero() ? ExtRational::infinity() : rho_inv.reciprocal();
    if (rho != st.holder_exp) {
      violate(idx, "recorded holder_exp does not match the Holder combination");
      return rep;
    }
    ExtRational pure_inv = first ? w.gamma / st.u_exp : w.sigma / st.v_exp;
    if (opts.strict_holder ? !(pure_inv < one) : !(pure_inv <= one)) {
      violate(idx, "pure power exceeds the source space");
      return rep;
    }
    ExtRational pure =
        pure_inv.is_zero() ? ExtRational::infinity() : pure_inv.reciprocal();
    if (pure != st.pure_exp) {
      violate(idx, "recorded pure_exp does not match the pure power");
      return rep;
    }
    ExtRational h_cap = min(min(rho, pure), w.theta);
    if (h_cap != st.h_cap) {
      violate(idx, "recorded h_cap does not equal min(holder_exp, pure_exp, theta)");
      return rep;
    }
    if (st.result_exp < one) {
      violate(idx, "result exponent below 1");
      return rep;
    }
    ExtRational lhs = h_cap.reciprocal() - st.result_exp.reciprocal();
    if (!(lhs < gap)) {
      violate(idx, "smoothing inequality violated: 1/h_cap - 1/result_exp >= gap");
      return rep;
    }
    ExtRational margin = gap - lhs;
    if (margin != st.margin) {
      violate(idx, "recorded margin does not equal gap - (1/h_cap - 1/result_exp)");
      return rep;
    }
    if (!(margin.sign() > 0)) {
      violate(idx, "margin not positive");
      return rep;
    }
    if (st.result_exp.is_infinite()) {
      if (!(h_cap > pcc)) {
        violate(idx, "final step requires source exponent strictly above p'_c");
        return rep;
      }
      if (!(h_cap <= w.theta)) {
        violate(idx, "final step requires source exponent at most theta");
        return rep;
      }
    }
    bump(st.target, st.result_exp);
  }

  if (!(u_inf && v_inf)) {
    violate(-1, "chain does not drive both components to the supremum norm");
    return rep;
  }
  if (!cert.terminal) {
    violate(-1, "terminal flag inconsistent with the steps");
    return rep;
  }
  return rep;
}

ValidationReport validate(const Certificate& cert, const SystemParams& params,
                          ValidateOptions opts) {
  bool swapped = params.q + params.s < params.p + params.r;
  SystemParams w = swapped ? params.swapped() : params;
  const SystemParams& c = cert.params;
  if (c.n != w.n || c.kind != w.kind || c.r != w.r || c.s != w.s || c.p != w.p ||
      c.q != w.q || c.gamma != w.gamma || c.sigma != w.sigma || c.theta != w.theta ||
      cert.selected.swapped != swapped) {
    ValidationReport rep;
    rep.ok = false;
    rep.first_violation =
        Violation{-1, "certificate parameters do not match the supplied system"};
    return rep;
  }
  return validate(cert, opts);
}

}  // namespace regula
