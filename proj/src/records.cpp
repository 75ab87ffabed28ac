// records.cpp - Versioned text records for classification results
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include "regula/records.hpp"

#include <sstream>
#include <stdexcept>

namespace regula {

namespace {

constexpr const char* kHeader = "regula-classify v1";

Relation relation_from_symbol(const std::string& s) {
  if (s == "<") return Relation::Less;
  if (s == "<=") return Relation::LessEq;
  if (s == ">") return Relation::Greater;
  if (s == ">=") return Relation::GreaterEq;
  if (s == "=") return Relation::Equal;
  throw std::runtime_error("unknown relation symbol '" + s + "'");
}

}  // namespace

std::string render_record(const OutputRecord& rec) {
  std::ostringstream os;
  os << kHeader << '\n';
  os << "kind " << kind_name(rec.params.kind) << '\n';
  os << "n " << rec.params.n << '\n';
  os << "r " << rec.params.r.str() << '\n';
  os << "s " << rec.params.s.str() << '\n';
  os << "p " << rec.params.p.str() << '\n';
  os << "q " << rec.params.q.str() << '\n';
  os << "gamma " << rec.params.gamma.str() << '\n';
  os << "sigma " << rec.params.sigma.str() << '\n';
  os << "theta " << rec.params.theta.str() << '\n';
  os << "p_c " << rec.report.p_c.str() << '\n';
  os << "p_c_conj " << rec.report.p_c_conj.str() << '\n';
  os << "denom " << rec.report.indices.denom().str() << '\n';
  if (rec.report.indices.defined()) {
    os << "alpha " << rec.report.indices.alpha().str() << '\n';
    os << "beta " << rec.report.indices.beta().str() << '\n';
  }
  os << "verdict " << verdict_name(rec.verdict.kind) << '\n';
  if (rec.verdict.kind == VerdictKind::SingularExampleExists)
    os << "constructible " << (rec.verdict.constructible ? "yes" : "no") << '\n';
  if (!rec.verdict.reason.empty()) os << "reason " << rec.verdict.reason << '\n';
  for (const Check& c : rec.report.checks) {
    os << "check " << c.name << ' ' << c.lhs.str() << ' ' << relation_symbol(c.rel)
       << ' ' << c.rhs.str() << ' ' << (c.satisfied ? "ok" : "fail") << '\n';
  }
  for (const std::string& note : rec.report.redundancy_notes)
    os << "note " << note << '\n';
  os << "elapsed_us " << rec.elapsed_us << '\n';
  return os.str();
}

OutputRecord parse_record(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto fail = [](const std::string& w) -> std::string {
    throw std::runtime_error("bad classify record: " + w);
  };
  if (!std::getline(in, line) || line != kHeader) fail("missing header");

  std::optional<SolutionKind> kind;
  int n = 0;
  ExtRational r, s, p, q, gamma, sigma, theta;
  ExtRational p_c, p_c_conj, denom;
  std::optional<ExtRational> alpha, beta;
  Verdict verdict;
  std::optional<VerdictKind> vkind;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  long long elapsed = 0;

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto sp = line.find(' ');
    if (sp == std::string::npos) fail("expected 'key value': " + line);
    std::string key = line.substr(0, sp), val = line.substr(sp + 1);
    if (key == "kind") {
      kind = kind_from_string(val);
      if (!kind) fail("unknown kind " + val);
    } else if (key == "n") {
      n = std::stoi(val);
    } else if (key == "r") r = ExtRational::from_string(val);
    else if (key == "s") s = ExtRational::from_string(val);
    else if (key == "p") p = ExtRational::from_string(val);
    else if (key == "q") q = ExtRational::from_string(val);
    else if (key == "gamma") gamma = ExtRational::from_string(val);
    else if (key == "sigma") sigma = ExtRational::from_string(val);
    else if (key == "theta") theta = ExtRational::from_string(val);
    else if (key == "p_c") p_c = ExtRational::from_string(val);
    else if (key == "p_c_conj") p_c_conj = ExtRational::from_string(val);
    else if (key == "denom") denom = ExtRational::from_string(val);
    else if (key == "alpha") alpha = ExtRational::from_string(val);
    else if (key == "beta") beta = ExtRational::from_string(val);
    else if (key == "verdict") {
      for (VerdictKind k : {VerdictKind::RegularityCertified, VerdictKind::SingularExampleExists,
                            VerdictKind::CriticalBoundary, VerdictKind::OutsideScope})
        if (val == verdict_name(k)) vkind = k;
      if (!vkind) fail("unknown verdict " + val);
    } else if (key == "constructible") {
      verdict.constructible = val == "yes";
    } else if (key == "reason") {
      verdict.reason = val;
    } else if (key == "check") {
      std::istringstream cs(val);
      std::string name, lhs, rel, rhs, ok;
      if (!(cs >> name >> lhs >> rel >> rhs >> ok)) fail("bad check line: " + val);
      Check c;
      c.name = name;
      c.lhs = ExtRational::from_string(lhs);
      c.rel = relation_from_symbol(rel);
      c.rhs = ExtRational::from_string(rhs);
      c.satisfied = ok == "ok";
      checks.push_back(std::move(c));
    } else if (key == "note") {
      notes.push_back(val);
    } else if (key == "elapsed_us") {
      elapsed = std::stoll(val);
    } else {
      fail("unknown key " + key);
    }
  }
  if (!kind || !vkind) fail("record incomplete");

  OutputRecord rec;
  rec.params = SystemParams::make(n, *kind, r, s, p, q, gamma, sigma, theta);
  rec.verdict = verdict;
  rec.verdict.kind = *vkind;
  rec.report.p_c = p_c;
  rec.report.p_c_conj = p_c_conj;
  rec.report.indices = ScalingIndices(denom, alpha, beta);
  rec.report.checks = std::move(checks);
  rec.report.redundancy_notes = std::move(notes);
  rec.elapsed_us = elapsed;
  return rec;
}

bool record_equal(const OutputRecord& a, const OutputRecord& b) {
  if (a.params.n != b.params.n || a.params.kind != b.params.kind ||
      a.params.r != b.params.r || a.params.s != b.params.s ||
      a.params.p != b.params.p || a.params.q != b.params.q ||
      a.params.gamma != b.params.gamma || a.params.sigma != b.params.sigma ||
      a.params.theta != b.params.theta)
    return false;
  if (a.verdict.kind != b.verdict.kind ||
      a.verdict.constructible != b.verdict.constructible ||
      a.verdict.reason != b.verdict.reason)
    return false;
  if (a.report.p_c != b.report.p_c || a.report.p_c_conj != b.report.p_c_conj ||
      a.report.indices.denom() != b.report.indices.denom() ||
      a.report.indices.defined() != b.report.indices.defined())
    return false;
  if (a.report.indices.defined() &&
      (a.report.indices.alpha() != b.report.indices.alpha() ||
       a.report.indices.beta() != b.report.indices.beta()))
    return false;
  if (a.report.checks.size() != b.report.checks.size()) return false;
  for (size_t i = 0; i < a.report.checks.size(); ++i) {
    const Check& x = a.report.checks[i];
    const Check& y = b.report.checks[i];
    if (x.name != y.name || x.lhs != y.lhs || x.rel != y.rel || x.rhs != y.rhs ||
        x.satisfied != y.satisfied)
      return false;
  }
  if (a.report.redundancy_notes != b.report.redundancy_notes) return false;
  return a.elapsed_us == b.elapsed_us;
}

}  // namespace regula
