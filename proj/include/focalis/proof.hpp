#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "focalis/sequent.hpp"

// Proof trees. A node stores the rule name, its conclusion sequent, an
// optional instantiation payload, and the premise subtrees. Rule names
// never encode choices: which disjunct/conjunct a one-premise rule took
// or which term a quantifier rule used lives in the Inst payload, so a
// checker must recompute the premise from it.

namespace focalis {

struct Inst {
  enum class Kind { None, TermArg, Branch };
  Kind kind = Kind::None;
  Term term{};     // TermArg: witness or eigenvariable
  int branch = 0;  // Branch: 1 or 2

  static Inst none() { return Inst{}; }
  static Inst of_term(Term t) {
    Inst i;
    i.kind = Kind::TermArg;
    i.term = std::move(t);
    return i;
  }
  static Inst of_branch(int b) {
    Inst i;
    i.kind = Kind::Branch;
    i.branch = b;
    return i;
  }
};

using AnySequent = std::variant<LjfSequent, LkfSequent, LlfSequent, LjSequent>;

enum class Calculus { Ljf, Lkf, Llf, Lj };

struct ProofTree {
  std::string rule;
  AnySequent conclusion;
  Inst inst;
  std::vector<ProofTree> premises;
};

inline Calculus calculus_of(const ProofTree& p) {
  switch (p.conclusion.index()) {
    case 0: return Calculus::Ljf;
    case 1: return Calculus::Lkf;
    case 2: return Calculus::Llf;
    default: return Calculus::Lj;
  }
}

inline const char* calculus_name(Calculus c) {
  switch (c) {
    case Calculus::Ljf: return "ljf";
    case Calculus::Lkf: return "lkf";
    case Calculus::Llf: return "llf";
    case Calculus::Lj: return "lj";
  }
  return "?";
}

inline size_t proof_nodes(const ProofTree& p) {
  size_t n = 1;
  for (const ProofTree& q : p.premises) n += proof_nodes(q);
  return n;
}

inline std::string print_sequent(const AnySequent& s) {
  return std::visit([](const auto& q) { return print_sequent(q); }, s);
}

// ---- text rendering: root conclusion first, premises indented ----

namespace detail {

inline void render_text_rec(const ProofTree& p, int depth, std::string& out) {
  out.append(static_cast<size_t>(depth) * 2, ' ');
  out += p.rule;
  if (p.inst.kind == Inst::Kind::TermArg) out += "[" + print(p.inst.term) + "]";
  if (p.inst.kind == Inst::Kind::Branch)
    out += "[" + std::to_string(p.inst.branch) + "]";
  out += ": " + print_sequent(p.conclusion) + "\n";
  for (const ProofTree& q : p.premises) render_text_rec(q, depth + 1, out);
}

}  // namespace detail

inline std::string render_text(const ProofTree& p) {
  std::string out;
  detail::render_text_rec(p, 0, out);
  return out;
}

// ---- LaTeX rendering (proof.sty-style \infer) ----

namespace detail {

inline std::string latex_sequent(const LjfSequent& s) {
  std::string g = "[";
  for (size_t i = 0; i < s.gamma.size(); ++i)
    g += (i ? ", " : "") + latex(s.gamma[i]);
  g += "]";
  switch (s.form) {
    case LjfForm::Async: {
      std::string out = g;
      for (const IF& f : s.theta) out += ", " + latex(f);
      out += " \\longrightarrow ";
      out += s.boxed ? "[" + latex(s.rhs) + "]" : latex(s.rhs);
      return out;
    }
    case LjfForm::LeftFocus:
      return g + " \\xrightarrow{" + latex(s.focus) + "} [" + latex(s.rhs) + "]";
    case LjfForm::RightFocus:
      return g + " \\Longrightarrow " + latex(s.focus);
  }
  return "?";
}

inline std::string latex_sequent(const LkfSequent& s) {
  std::string out = "\\vdash [";
  for (size_t i = 0; i < s.theta.size(); ++i)
    out += (i ? ", " : "") + latex(s.theta[i]);
  out += "]";
  if (s.focused) return out + " \\Downarrow " + latex(s.focus);
  for (const CF& f : s.gamma) out += ", " + latex(f);
  return out;
}

inline std::string latex_sequent(const LlfSequent& s) {
  std::string out = "\\vdash ";
  for (size_t i = 0; i < s.psi.size(); ++i)
    out += (i ? ", " : "") + latex(s.psi[i]);
  out += " ; ";
  for (size_t i = 0; i < s.delta.size(); ++i)
    out += (i ? ", " : "") + latex(s.delta[i]);
  if (s.focused) return out + " \\Downarrow " + latex(s.focus);
  out += " \\Uparrow ";
  for (size_t i = 0; i < s.list.size(); ++i)
    out += (i ? ", " : "") + latex(s.list[i]);
  return out;
}

inline std::string latex_sequent(const LjSequent& s) {
  std::string out;
  for (size_t i = 0; i < s.gamma.size(); ++i)
    out += (i ? ", " : "") + latex(s.gamma[i]);
  if (!out.empty()) out += " ";
  return out + "\\vdash " + latex(s.rhs);
}

inline std::string latex_escape_rule(const std::string& r) {
  std::string out;
  for (char ch : r) {
    if (ch == '&' || ch == '#') out += '\\';
    out += ch;
  }
  return out;
}

inline std::string render_latex_rec(const ProofTree& p) {
  std::string rule = latex_escape_rule(p.rule);
  if (p.inst.kind == Inst::Kind::TermArg) rule += "\\,[" + print(p.inst.term) + "]";
  if (p.inst.kind == Inst::Kind::Branch)
    rule += "\\,[" + std::to_string(p.inst.branch) + "]";
  std::string concl =
      std::visit([](const auto& s) { return latex_sequent(s); }, p.conclusion);
  std::string out = "\\infer[\\mathsf{" + rule + "}]{" + concl + "}{";
  for (size_t i = 0; i < p.premises.size(); ++i) {
    if (i) out += " & ";
    out += render_latex_rec(p.premises[i]);
  }
  return out + "}";
}

}  // namespace detail

inline std::string render_latex(const ProofTree& p) {
  return detail::render_latex_rec(p);
}

// ---- JSON serialization ----
// {"calculus": "...", "rule": "...", "sequent": "<printed form>",
//  "inst": {"term": "..."} | {"branch": n},   (omitted when absent)
//  "premises": [...]}

namespace detail {

inline nlohmann::json proof_to_json_rec(const ProofTree& p) {
  nlohmann::json j;
  j["calculus"] = calculus_name(calculus_of(p));
  j["rule"] = p.rule;
  j["sequent"] = print_sequent(p.conclusion);
  if (p.inst.kind == Inst::Kind::TermArg)
    j["inst"] = nlohmann::json{{"term", print(p.inst.term)}};
  else if (p.inst.kind == Inst::Kind::Branch)
    j["inst"] = nlohmann::json{{"branch", p.inst.branch}};
  j["premises"] = nlohmann::json::array();
  for (const ProofTree& q : p.premises)
    j["premises"].push_back(proof_to_json_rec(q));
  return j;
}

}  // namespace detail

inline std::string proof_to_json(const ProofTree& p, int indent = 2) {
  return detail::proof_to_json_rec(p).dump(indent);
}

struct ProofJsonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline ProofTree proof_from_json_rec(const nlohmann::json& j) {
  if (!j.is_object()) throw ProofJsonError("proof node must be an object");
  for (const char* k : {"calculus", "rule", "sequent", "premises"})
    if (!j.contains(k))
      throw ProofJsonError(std::string("proof node missing field '") + k + "'");
  ProofTree p;
  p.rule = j.at("rule").get<std::string>();
  std::string cal = j.at("calculus").get<std::string>();
  std::string seq = j.at("sequent").get<std::string>();
  try {
    if (cal == "ljf") p.conclusion = parse_ljf_sequent(seq, /*internal=*/true);
    else if (cal == "lkf") p.conclusion = parse_lkf_sequent(seq, true);
    else if (cal == "llf") p.conclusion = parse_llf_sequent(seq, true);
    else if (cal == "lj") p.conclusion = LjSequent(parse_lj_sequent(seq, true));
    else throw ProofJsonError("unknown calculus '" + cal + "'");
  } catch (const ParseError& e) {
    throw ProofJsonError("bad sequent \"" + seq + "\": " + e.what());
  }
  if (j.contains("inst")) {
    const nlohmann::json& i = j.at("inst");
    if (i.contains("term")) {
      try {
        p.inst = Inst::of_term(parse_term(i.at("term").get<std::string>(), true));
      } catch (const ParseError& e) {
        throw ProofJsonError(std::string("bad inst term: ") + e.what());
      }
    } else if (i.contains("branch")) {
      p.inst = Inst::of_branch(i.at("branch").get<int>());
    } else {
      throw ProofJsonError("inst must carry 'term' or 'branch'");
    }
  }
  for (const nlohmann::json& q : j.at("premises")) {
    ProofTree sub = proof_from_json_rec(q);
    if (calculus_of(sub) != calculus_of(p))
      throw ProofJsonError("premise calculus differs from conclusion calculus");
    p.premises.push_back(std::move(sub));
  }
  return p;
}

}  // namespace detail

inline ProofTree proof_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ProofJsonError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return detail::proof_from_json_rec(j);
  } catch (const nlohmann::json::exception& e) {
    throw ProofJsonError(std::string("malformed proof JSON: ") + e.what());
  }
}

}  // namespace focalis
