#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "shlab/parser.hpp"
#include "shlab/semantics.hpp"

namespace shlab {

// The named axioms, as an identity-catalog document.  This text is also the
// reference for the `NAME: <identity>` file format accepted by the CLI.
inline const char* builtin_identity_catalog_text() {
  return R"(# semi-Heyting axioms
SH1: x & (x -> y) = x & y
SH2: x & (y -> z) = x & ((x & y) -> (x & z))
SH3: x -> x = 1
H: (x & y) -> y = 1
Bo: x | x* = 1
# dually quasi-De Morgan axioms
DQDa1: 0' = 1
DQDa2: 1' = 0
DQDb: (x & y)' = x' | y'
DQDc: (x | y)'' = x'' | y''
DQDd: x'' & x = x''
DPCe: x | x' = 1
DSt: x' & x'' = 0
DM: x'' = x
Dms: (x | y)' = x' & y'
B: (x | y*)' = x' & y*'
JID: x' | (y -> z) = (x' | y) -> (x' | z)
SJID: x | (y -> z) = (x | y) -> (x | z)
L: (x -> y) | (y -> x) = 1
Reg: x & x+ & (y | y*) = x & x+
SC: @SC
)";
}

inline const std::vector<CatalogEntry>& builtin_identity_catalog() {
  static const std::vector<CatalogEntry> entries =
      parse_identity_catalog(builtin_identity_catalog_text());
  return entries;
}

inline const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const CatalogEntry& e : builtin_identity_catalog())
    if (e.name == name) return &e;
  return nullptr;
}

// (x & x'*)^{k('*)}
inline TermPtr level_core_term(int k) {
  TermPtr y = Term::meet(Term::var("x"), Term::star(Term::neg(Term::var("x"))));
  for (int i = 0; i < k; ++i) y = Term::star(Term::neg(y));
  return y;
}

// The level-n identity.  Lev 0 is x = x & x'*; for n >= 1 it is
// (x & x'*)^{(n-1)('*)} = (x & x'*)^{n('*)}, the form under which dually
// Stone algebras are level 1 and the six-element witness is level 2.
inline Identity lev_identity(int n) {
  if (n < 0) throw validation_error("level must be >= 0");
  if (n == 0) return Identity(Term::var("x"), level_core_term(0));
  return Identity(level_core_term(n - 1), level_core_term(n));
}

// The t_n form of the same family: t_n(x) = t_{n+1}(x).
inline Identity tlev_identity(int n) {
  if (n < 0) throw validation_error("level must be >= 0");
  return Identity(t_n_term(n), t_n_term(n + 1));
}

// x1 | ... | xn | (x1 -> x2) | ... | (x_{n-1} -> xn) = 1
inline Identity cn_identity(int n) {
  if (n < 1) throw validation_error("C_n needs n >= 1");
  auto var = [](int i) { return Term::var("x" + std::to_string(i)); };
  TermPtr lhs = var(1);
  for (int i = 2; i <= n; ++i) lhs = Term::join(lhs, var(i));
  for (int i = 1; i < n; ++i)
    lhs = Term::join(lhs, Term::imp(var(i), var(i + 1)));
  return Identity(std::move(lhs), Term::one());
}

// ---------------------------------------------------------------------------

struct PredicateResult {
  std::string id;
  bool holds = true;
  std::string failed_item;            // conjunct that failed, when !holds
  std::optional<Assignment> witness;  // least witness of that conjunct
};

struct Profile {
  std::string algebra;
  std::vector<PredicateResult> entries;

  const PredicateResult* find(const std::string& id) const {
    for (const auto& e : entries)
      if (e.id == id) return &e;
    return nullptr;
  }
  bool holds(const std::string& id) const {
    const PredicateResult* e = find(id);
    if (!e) throw validation_error("no predicate '" + id + "' in profile");
    return e->holds;
  }
};

namespace detail {

struct PredicateDef {
  std::string id;
  std::vector<std::string> items;  // identity-catalog names, @cond, or #levN
};

inline const std::vector<PredicateDef>& predicate_defs() {
  static const std::vector<PredicateDef> defs = [] {
    std::vector<std::string> sh = {"SH1", "SH2", "SH3"};
    std::vector<std::string> dqd = sh;
    for (const char* s : {"DQDa1", "DQDa2", "DQDb", "DQDc", "DQDd"})
      dqd.push_back(s);
    auto plus = [](std::vector<std::string> base, const char* extra) {
      base.push_back(extra);
      return base;
    };
    return std::vector<PredicateDef>{
        {"SH", sh},
        {"H", plus(sh, "H")},
        {"Bo", plus(sh, "Bo")},
        {"DQD", dqd},
        {"DPC", plus(dqd, "DPCe")},
        {"DSt", plus(dqd, "DSt")},
        {"DM", plus(dqd, "DM")},
        {"Dms", plus(dqd, "Dms")},
        {"B", plus(dqd, "B")},
        {"JID", plus(dqd, "JID")},
        {"StrongJID", plus(dqd, "SJID")},
        {"L", plus(sh, "L")},
        {"Lev0", {"#lev0"}},
        {"Lev1", {"#lev1"}},
        {"Lev2", {"#lev2"}},
        {"Lev3", {"#lev3"}},
        {"SC", {"@SC"}},
        {"Regular", {"Reg"}},
    };
  }();
  return defs;
}

// Evaluates one named item against an algebra.
inline CheckResult eval_item(const FiniteAlgebra& a, const std::string& item) {
  if (item.rfind("#lev", 0) == 0)
    return satisfies(a, lev_identity(std::stoi(item.substr(4))));
  if (item.rfind("#cn", 0) == 0)
    return satisfies(a, cn_identity(std::stoi(item.substr(3))));
  if (item[0] == '@') return satisfies_condition(a, item.substr(1));
  const CatalogEntry* e = find_catalog_entry(item);
  if (!e) throw validation_error("unknown identity '" + item + "'");
  if (e->is_condition) return satisfies_condition(a, e->condition_id);
  return satisfies(a, e->identity);
}

}  // namespace detail

// Every named predicate, with witnesses for the failures.  Shared conjuncts
// are evaluated once.  cn_max > 0 appends Cn(2)..Cn(cn_max); these grow an
// extra variable per step, so they are opt-in.
inline Profile classify(const FiniteAlgebra& a, int cn_max = 0) {
  std::map<std::string, CheckResult> memo;
  auto item_result = [&](const std::string& item) -> const CheckResult& {
    auto it = memo.find(item);
    if (it == memo.end())
      it = memo.emplace(item, detail::eval_item(a, item)).first;
    return it->second;
  };

  Profile p;
  p.algebra = a.name();
  for (const auto& def : detail::predicate_defs()) {
    PredicateResult r;
    r.id = def.id;
    for (const std::string& item : def.items) {
      const CheckResult& cr = item_result(item);
      if (!cr.holds) {
        r.holds = false;
        r.failed_item = item[0] == '#' || item[0] == '@' ? item.substr(1) : item;
        r.witness = cr.witness;
        break;
      }
    }
    p.entries.push_back(std::move(r));
  }
  for (int n = 2; n <= cn_max; ++n) {
    PredicateResult r;
    r.id = "C" + std::to_string(n);
    CheckResult cr = satisfies(a, cn_identity(n));
    if (!cr.holds) {
      r.holds = false;
      r.failed_item = r.id;
      r.witness = cr.witness;
    }
    p.entries.push_back(std::move(r));
  }
  return p;
}

struct LevelResult {
  std::optional<int> level;    // least n with the level-n identity
  std::optional<int> t_level;  // least n with t_n = t_{n+1}
  bool forms_agree() const { return level == t_level; }
};

inline LevelResult level_of(const FiniteAlgebra& a, int cap = 8) {
  LevelResult r;
  for (int n = 0; n <= cap && !r.level; ++n)
    if (satisfies(a, lev_identity(n)).holds) r.level = n;
  for (int n = 0; n <= cap && !r.t_level; ++n)
    if (satisfies(a, tlev_identity(n)).holds) r.t_level = n;
  return r;
}

// ---------------------------------------------------------------------------
// Lemma suites: families of identities checked together under a hypothesis
// class.  The hypothesis is evaluated first; when it fails the suite is
// reported not-applicable instead of failed.

struct SuiteItemResult {
  std::string name;
  bool holds;
  std::optional<Assignment> witness;
};

struct SuiteReport {
  std::string suite_id;
  std::vector<std::string> hypothesis;
  bool applicable = true;
  std::string failed_hypothesis;
  std::optional<Assignment> hypothesis_witness;
  std::vector<SuiteItemResult> items;

  bool all_pass() const {
    if (!applicable) return false;
    for (const auto& i : items)
      if (!i.holds) return false;
    return true;
  }
};

namespace detail {

struct SuiteDef {
  std::string id;
  std::vector<std::string> hypothesis;  // predicate ids (conjunction)
  std::vector<std::pair<std::string, std::string>> items;  // name, identity
};

inline const std::vector<SuiteDef>& suite_defs() {
  static const std::vector<SuiteDef> defs = {
      {"2.2",
       {"DQD"},
       {
           {"i.a", "1'* = 1"},
           {"i.b", "1 -> x = x"},
           {"ii", "y' & (x & y)' = y'"},
           {"iii", "(x & y)'* = x'* & y'*"},
           {"iv", "x''' = x'"},
           {"v", "(x | y)' = (x'' | y)'"},
           {"vi", "x & (y | (x -> z)) = x & (y | z)"},
           {"vii", "(x & (x -> y)'') & y = x & (x -> y)''"},
       }},
      {"2.3",
       {"DQD"},
       {
           {"1", "(x | y)' & (x' -> (x | y)') = (x | y)'"},
           {"2", "(x | (y | z)')' = (x | y')' | (x | z')'"},
           {"3", "x & ((x -> y) | z) = x & (y | z)"},
           {"4", "y & (x -> (y & z)) = y & (x -> z)"},
           {"5", "(y & (x -> z)) & (x -> (y & z)) = y & (x -> z)"},
           {"6", "x & (y -> (x & y)) = x"},
           {"7", "(x | y)' = x' & ((x | y)' | (x' -> (x | y)')'')"},
           {"8", "x & ((x -> y) -> y) = x"},
       }},
      {"3.4",
       {"JID"},
       {
           {"1", "x' -> (x' | y) = x' | (x' -> y)"},
           {"2", "x' -> (x' | y) = x' | (0 -> y)"},
           {"3", "x' | (x' -> y) = x' | (0 -> y)"},
           {"3b", "x' | x'* = 1"},
           {"4", "(x' | y) -> x' = x' | y*"},
           {"5", "(x' | y) -> x' = x' | (y -> x')"},
           {"6", "x' | (y -> x') = x' | y*"},
           {"7", "x' -> (x | y)' = x'* | (x | y)'"},
       }},
      {"3.6",
       {"JID"},
       {
           {"1", "x'*'' = x'*"},
           {"2", "x''* = x'*'"},
           {"3", "x -> (x & y') = x* | y'"},
           {"4", "(x & y'*)* = y' | x*"},
           {"5", "(x' | y''*)*' = (x'' & y'*)*"},
       }},
      {"3.7",
       {"JID"},
       {
           {"main", "x & x'* & x'*'* = (x & x'*)'*"},
       }},
      {"4.3",
       {"DSt"},
       {
           {"a", "(x | y)' = (x'* | y'*)*"},
           {"b", "(x | y)' = x' & y'"},
       }},
      {"6.2",
       {"DQD", "L"},
       {
           {"a", "(x -> y) | (y -> x)'' = 1"},
           {"b", "x & (y | (y -> x)'') = x"},
       }},
  };
  return defs;
}

}  // namespace detail

inline std::vector<std::string> suite_ids() {
  std::vector<std::string> out;
  for (const auto& s : detail::suite_defs()) out.push_back(s.id);
  return out;
}

inline SuiteReport check_suite(const FiniteAlgebra& a,
                               const std::string& suite_id) {
  const detail::SuiteDef* def = nullptr;
  for (const auto& s : detail::suite_defs())
    if (s.id == suite_id) def = &s;
  if (!def) throw validation_error("unknown suite '" + suite_id + "'");

  SuiteReport rep;
  rep.suite_id = suite_id;
  rep.hypothesis = def->hypothesis;
  Profile prof = classify(a);
  for (const std::string& h : def->hypothesis) {
    const PredicateResult* pr = prof.find(h);
    if (pr && !pr->holds) {
      rep.applicable = false;
      rep.failed_hypothesis = h + (pr->failed_item.empty() ? "" : "." + pr->failed_item);
      rep.hypothesis_witness = pr->witness;
      return rep;
    }
  }
  for (const auto& [name, text] : def->items) {
    CheckResult cr = satisfies(a, parse_identity(text));
    rep.items.push_back({name, cr.holds, cr.witness});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Serialization (stable key order for golden comparisons).

inline nlohmann::ordered_json witness_json(const Assignment& w) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : w) j[k] = v;
  return j;
}

inline nlohmann::ordered_json profile_json(const Profile& p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  j["algebra"] = p.algebra;
  nlohmann::ordered_json preds = nlohmann::ordered_json::object();
  for (const auto& e : p.entries) {
    nlohmann::ordered_json one = nlohmann::ordered_json::object();
    one["holds"] = e.holds;
    if (!e.holds) {
      one["failed"] = e.failed_item;
      if (e.witness) one["witness"] = witness_json(*e.witness);
    }
    preds[e.id] = std::move(one);
  }
  j["predicates"] = std::move(preds);
  return j;
}

}  // namespace shlab
