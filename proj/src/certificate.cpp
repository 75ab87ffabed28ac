// certificate.cpp - Bootstrap certificates: data model and text schema
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include "regula/certificate.hpp"

#include <sstream>

namespace regula {

const char* case_name(CaseTag c) {
  switch (c) {
    case CaseTag::I: return "I";
    case CaseTag::II: return "II";
    case CaseTag::III: return "III";
  }
  return "?";
}

const char* equation_name(Equation e) {
  return e == Equation::First ? "first" : "second";
}

namespace {

constexpr const char* kHeader = "regula-certificate v1";

void put(std::ostringstream& os, const char* key, const std::string& value) {
  os << key << ' ' << value << '\n';
}

}  // namespace

std::string serialize(const Certificate& cert) {
  std::ostringstream os;
  os << kHeader << '\n';
  os << "[params]\n";
  put(os, "kind", kind_name(cert.params.kind));
  os << "n " << cert.params.n << '\n';
  put(os, "r", cert.params.r.str());
  put(os, "s", cert.params.s.str());
  put(os, "p", cert.params.p.str());
  put(os, "q", cert.params.q.str());
  put(os, "gamma", cert.params.gamma.str());
  put(os, "sigma", cert.params.sigma.str());
  put(os, "theta", cert.params.theta.str());
  os << "[selected]\n";
  put(os, "case", case_name(cert.selected.case_tag));
  put(os, "swapped", cert.selected.swapped ? "yes" : "no");
  put(os, "k", cert.selected.k.str());
  if (cert.selected.k1) put(os, "k1", cert.selected.k1->str());
  if (cert.selected.epsilon) put(os, "epsilon", cert.selected.epsilon->str());
  if (cert.selected.tau) put(os, "tau", cert.selected.tau->str());
  if (cert.selected.eta) put(os, "eta", cert.selected.eta->str());
  os << "[base]\n";
  for (const BaseEntry& b : cert.base)
    os << func_name(b.func) << ' ' << b.exponent.str() << '\n';
  for (const Step& st : cert.steps) {
    os << "[step]\n";
    put(os, "equation", equation_name(st.equation));
    put(os, "target", func_name(st.target));
    put(os, "u_exp", st.u_exp.str());
    put(os, "v_exp", st.v_exp.str());
    put(os, "holder_exp", st.holder_exp.str());
    put(os, "pure_exp", st.pure_exp.str());
    put(os, "h_cap", st.h_cap.str());
    put(os, "result_exp", st.result_exp.str());
    put(os, "margin", st.margin.str());
  }
  os << "[terminal]\n";
  put(os, "terminal", cert.terminal ? "yes" : "no");
  return os.str();
}

namespace {

class LineReader {
public:
  explicit LineReader(const std::string& text) : in_(text) {}

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      return true;
    }
    return false;
  }

private:
  std::istringstream in_;
};

[[noreturn]] void fail(const std::string& what) { throw CertificateParseError(what); }

std::pair<std::string, std::string> split_kv(const std::string& line) {
  auto pos = line.find(' ');
  if (pos == std::string::npos) fail("expected 'key value', got '" + line + "'");
  return {line.substr(0, pos), line.substr(pos + 1)};
}

ExtRational parse_rat(const std::string& s) {
  try {
    return ExtRational::from_string(s);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

std::string expect_key(LineReader& rd, const char* key) {
  std::string line;
  if (!rd.next(line)) fail(std::string("unexpected end of file, expected ") + key);
  auto [k, v] = split_kv(line);
  if (k != key) fail("expected field '" + std::string(key) + "', got '" + k + "'");
  return v;
}

bool parse_yesno(const std::string& v, const char* key) {
  if (v == "yes") return true;
  if (v == "no") return false;
  fail(std::string(key) + " must be yes or no");
}

}  // namespace

Certificate parse_certificate(const std::string& text) {
  LineReader rd(text);
  std::string line;
  if (!rd.next(line) || line != kHeader) fail("missing or unsupported header line");
  if (!rd.next(line) || line != "[params]") fail("expected [params]");

  std::string kind_s = expect_key(rd, "kind");
  auto kind = kind_from_string(kind_s);
  if (!kind) fail("unknown solution kind '" + kind_s + "'");
  std::string n_s = expect_key(rd, "n");
  int n = 0;
  try {
    size_t used = 0;
    n = std::stoi(n_s, &used);
    if (used != n_s.size()) fail("bad dimension '" + n_s + "'");
  } catch (const std::exception&) {
    fail("bad dimension '" + n_s + "'");
  }
  ExtRational r = parse_rat(expect_key(rd, "r"));
  ExtRational s = parse_rat(expect_key(rd, "s"));
  ExtRational p = parse_rat(expect_key(rd, "p"));
  ExtRational q = parse_rat(expect_key(rd, "q"));
  ExtRational gamma = parse_rat(expect_key(rd, "gamma"));
  ExtRational sigma = parse_rat(expect_key(rd, "sigma"));
  ExtRational theta = parse_rat(expect_key(rd, "theta"));

  Certificate cert;
  try {
    cert.params = SystemParams::make(n, *kind, r, s, p, q, gamma, sigma, theta);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }

  if (!rd.next(line) || line != "[selected]") fail("expected [selected]");
  std::string case_s = expect_key(rd, "case");
  if (case_s == "I") cert.selected.case_tag = CaseTag::I;
  else if (case_s == "II") cert.selected.case_tag = CaseTag::II;
  else if (case_s == "III") cert.selected.case_tag = CaseTag::III;
  else fail("unknown case tag '" + case_s + "'");
  cert.selected.swapped = parse_yesno(expect_key(rd, "swapped"), "swapped");
  cert.selected.k = parse_rat(expect_key(rd, "k"));

  // optional selected fields, then [base]
  if (!rd.next(line)) fail("unexpected end of file before [base]");
  auto take_optional = [&](const char* key, std::optional<ExtRational>& slot) {
    if (line.rfind(std::string(key) + " ", 0) == 0) {
      slot = parse_rat(line.substr(std::string(key).size() + 1));
      if (!rd.next(line)) fail("unexpected end of file before [base]");
    }
  };
  take_optional("k1", cert.selected.k1);
  take_optional("epsilon", cert.selected.epsilon);
  take_optional("tau", cert.selected.tau);
  take_optional("eta", cert.selected.eta);
  if (line != "[base]") fail("expected [base]");

  bool saw_terminal = false;
  while (rd.next(line)) {
    if (line == "[step]" || line == "[terminal]") break;
    auto [f, e] = split_kv(line);
    BaseEntry entry;
    if (f == "u") entry.func = Func::U;
    else if (f == "v") entry.func = Func::V;
    else fail("base entry function must be u or v");
    entry.exponent = parse_rat(e);
    cert.base.push_back(std::move(entry));
  }

  while (line == "[step]") {
    Step st;
    std::string eq = expect_key(rd, "equation");
    if (eq == "first") st.equation = Equation::First;
    else if (eq == "second") st.equation = Equation::Second;
    else fail("unknown equation '" + eq + "'");
    std::string tgt = expect_key(rd, "target");
    if (tgt == "u") st.target = Func::U;
    else if (tgt == "v") st.target = Func::V;
    else fail("unknown target '" + tgt + "'");
    st.u_exp = parse_rat(expect_key(rd, "u_exp"));
    st.v_exp = parse_rat(expect_key(rd, "v_exp"));
    st.holder_exp = parse_rat(expect_key(rd, "holder_exp"));
    st.pure_exp = parse_rat(expect_key(rd, "pure_exp"));
    st.h_cap = parse_rat(expect_key(rd, "h_cap"));
    st.result_exp = parse_rat(expect_key(rd, "result_exp"));
    st.margin = parse_rat(expect_key(rd, "margin"));
    cert.steps.push_back(std::move(st));
    if (!rd.next(line)) fail("unexpected end of file, expected [terminal]");
  }

  if (line == "[terminal]") {
    cert.terminal = parse_yesno(expect_key(rd, "terminal"), "terminal");
    saw_terminal = true;
  }
  if (!saw_terminal) fail("missing [terminal] section");
  if (rd.next(line)) fail("trailing content after [terminal]: '" + line + "'");
  return cert;
}

bool operator==(const Step& a, const Step& b) {
  return a.equation == b.equation && a.target == b.target && a.u_exp == b.u_exp &&
         a.v_exp == b.v_exp && a.holder_exp == b.holder_exp &&
         a.pure_exp == b.pure_exp && a.h_cap == b.h_cap &&
         a.result_exp == b.result_exp && a.margin == b.margin;
}

bool operator==(const BaseEntry& a, const BaseEntry& b) {
  return a.func == b.func && a.exponent == b.exponent;
}

bool operator==(const SelectedParameters& a, const SelectedParameters& b) {
  return a.case_tag == b.case_tag && a.swapped == b.swapped && a.k == b.k &&
         a.k1 == b.k1 && a.epsilon == b.epsilon && a.tau == b.tau && a.eta == b.eta;
}

bool operator==(const Certificate& a, const Certificate& b) {
  return a.params.n == b.params.n && a.params.kind == b.params.kind &&
         a.params.r == b.params.r && a.params.s == b.params.s &&
         a.params.p == b.params.p && a.params.q == b.params.q &&
         a.params.gamma == b.params.gamma && a.params.sigma == b.params.sigma &&
         a.params.theta == b.params.theta && a.selected == b.selected &&
         a.base == b.base && a.steps == b.steps && a.terminal == b.terminal;
}

}  // namespace regula
