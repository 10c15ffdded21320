#pragma once

// The command layer behind the ordco executable. Each cmd_* returns a
// CommandResult holding both the JSON document and the plain-text lines, so
// the binary only parses arguments, times the call and prints.

#include <filesystem>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ordco/atlas.hpp"
#include "ordco/cyclotomic.hpp"
#include "ordco/order_factorization.hpp"
#include "ordco/serialize.hpp"
#include "ordco/simple_orders.hpp"

namespace ordco::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kBudget = 3 };

struct CommandResult {
  CommandResult() = default;
  explicit CommandResult(std::string name) : command(std::move(name)) {}

  std::string command;
  Json inputs = Json::object();
  Json results = Json::array();
  Json extra = Json::object();  // status and command-specific top-level fields
  std::vector<std::string> text;
  int exit_code = kOk;

  void set_verified(bool ok) {
    extra["status"] = ok ? "verified" : "failed";
    exit_code = ok ? kOk : kMismatch;
    text.push_back(ok ? "verified" : "FAILED");
  }

  Json to_json(std::optional<double> elapsed_ms) const {
    Json j = extra;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    j["elapsed_ms"] = elapsed_ms ? Json(*elapsed_ms) : Json(nullptr);
    return j;
  }
};

inline PrimePowerField parse_field(const std::string& q) { return PrimePowerField::from_q(parse_bigint(q)); }

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline CommandResult cmd_order(const std::string& group, const std::string& q) {
  CommandResult r{"order"};
  r.inputs = {{"group", group}, {"q", q}};
  const auto g = parse_group(group);
  const auto f = parse_field(q);
  const BigInt order = group_order(g, f);
  r.results.push_back({{"group", g.to_string()},
                       {"q", to_string(f.q())},
                       {"degrees", degrees_json(group_degrees(g))},
                       {"N", exponent_N(g)},
                       {"order", to_string(order)}});
  r.text.push_back(to_string(order));
  return r;
}

inline CommandResult cmd_degrees(const std::string& group) {
  CommandResult r{"degrees"};
  r.inputs = {{"group", group}};
  const auto g = parse_group(group);
  const auto d = group_degrees(g);
  r.results.push_back({{"group", g.to_string()}, {"rank", g.rank()}, {"degrees", degrees_json(d)}, {"N", exponent_N(d)}});
  std::string line;
  for (unsigned x : d.values) line += (line.empty() ? "" : " ") + std::to_string(x);
  r.text.push_back(line);
  return r;
}

inline CommandResult cmd_factor(const std::string& group, const std::string& q, const FactorOptions& opts) {
  CommandResult r{"factor"};
  r.inputs = {{"group", group}, {"q", q}};
  const auto g = parse_group(group);
  const auto f = parse_field(q);
  const Factorization fac = factor_group_order(g, f, opts);
  Json row = {{"group", g.to_string()}, {"q", to_string(f.q())}, {"order", to_string(fac.value)},
              {"factorization", factorization_json(fac)}};
  if (fac.value > 1) {
    const auto lead = largest_prime_power_contribution(fac);
    row["largest"] = prime_power_json(lead.largest);
    row["second"] = lead.second ? prime_power_json(*lead.second) : Json(nullptr);
  }
  r.results.push_back(row);
  r.text.push_back(to_string(fac.value) + " = " + fac.to_string());
  return r;
}

inline CommandResult cmd_recover(const std::string& order_text, int max_rank, const std::optional<std::string>& q_max_text,
                                 const std::optional<std::filesystem::path>& atlas_path, const FactorOptions& opts) {
  CommandResult r{"recover"};
  r.inputs = {{"order", order_text}, {"rank_max", max_rank}};
  r.inputs["q_max"] = q_max_text ? Json(*q_max_text) : Json(nullptr);
  const BigInt order = parse_bigint(order_text);
  std::optional<BigInt> q_max;
  if (q_max_text) q_max = parse_bigint(*q_max_text);
  std::optional<AtlasFile> atlas;
  if (atlas_path) atlas = AtlasFile::load(*atlas_path);
  bool hit = false;
  const auto cands = recover_with_atlas(atlas ? &*atlas : nullptr, order, max_rank, q_max, opts, &hit);
  r.extra["atlas"] = !atlas ? "none" : hit ? "hit" : "miss";
  for (const auto& c : cands) {
    r.results.push_back(candidate_json(c));
    r.text.push_back(c.field ? c.group.to_string() + " over F_" + to_string(c.field->q()) : std::string("trivial group"));
  }
  if (cands.empty()) r.text.push_back("no candidates");
  return r;
}

inline CommandResult cmd_coincide(std::optional<unsigned> max_rank, std::optional<unsigned> max_degree,
                                  std::optional<unsigned> factors) {
  CommandResult r{"coincide"};
  r.inputs = {{"rank_max", optional_json(max_rank)}, {"degree_max", optional_json(max_degree)},
              {"factors", optional_json(factors)}};
  if (max_rank.has_value() == max_degree.has_value()) {
    throw PreconditionError("coincide: give exactly one of --rank-max and --degree-max");
  }
  std::vector<CoincidenceClass> classes;
  if (max_degree) {
    if (factors && *factors != 2) {
      throw PreconditionError("coincide: --degree-max searches two-factor pairs; --factors " + std::to_string(*factors) +
                              " is not supported");
    }
    classes = search_two_factor_pairs(*max_degree);
  } else {
    classes = search_coincidences(*max_rank, factors);
    for (auto& c : classes) c = canonical_orientation(c);
    std::sort(classes.begin(), classes.end());
  }
  for (const auto& c : classes) {
    r.results.push_back(class_json(c));
    r.text.push_back(c.to_string());
  }
  return r;
}

inline CommandResult cmd_reduce(const std::string& pair) {
  CommandResult r{"reduce"};
  r.inputs = {{"pair", pair}};
  const auto c = parse_pair(pair);
  const auto w = reduce_to_word(c);
  Json row = word_json(w);
  row["pair"] = c.to_string();
  row["recomposes"] = evaluate_word(w) == c;
  r.results.push_back(row);
  r.text.push_back(w.empty() ? std::string("1") : w.to_string());
  return r;
}

inline std::vector<GeneratorId> bounded_generators(unsigned b_max = 15, unsigned d_max = 16) {
  std::vector<GeneratorId> ids = {GeneratorId::G2(), GeneratorId::F4(), GeneratorId::E6(), GeneratorId::E7(),
                                  GeneratorId::E8()};
  for (unsigned n = 2; n <= b_max; ++n) ids.push_back(GeneratorId::B(n));
  for (unsigned n = 4; n <= d_max; ++n) ids.push_back(GeneratorId::D(n));
  return ids;
}

inline CommandResult cmd_generators(unsigned b_max, unsigned d_max) {
  CommandResult r{"generators"};
  r.inputs = {{"b_max", b_max}, {"d_max", d_max}};
  for (const auto& id : bounded_generators(b_max, d_max)) {
    const auto c = generator(id);
    Json row = class_json(c);
    row["id"] = id.to_string();
    r.results.push_back(row);
    r.text.push_back(id.to_string() + "  " + c.to_string());
  }
  return r;
}

struct VerifyBounds {
  std::optional<unsigned> rank_max;
  std::optional<unsigned long> q_max;
  std::optional<unsigned> n_max;
  std::optional<unsigned> degree_max;
  std::optional<long> a_max;
  std::optional<unsigned long> p_max;

  Json to_json() const {
    Json j = Json::object();
    if (rank_max) j["rank_max"] = *rank_max;
    if (q_max) j["q_max"] = *q_max;
    if (n_max) j["n_max"] = *n_max;
    if (degree_max) j["degree_max"] = *degree_max;
    if (a_max) j["a_max"] = *a_max;
    if (p_max) j["p_max"] = *p_max;
    return j;
  }
};

inline const std::vector<std::string>& verify_targets() {
  static const std::vector<std::string> t = {"prop31", "thm42", "triples", "artin-tits", "lemma21", "zsygmondy"};
  return t;
}

namespace detail {

inline void verify_largest_contribution(CommandResult& r, const VerifyBounds& b, const FactorOptions& opts) {
  const unsigned rank_max = b.rank_max.value_or(4);
  const unsigned long q_max = b.q_max.value_or(25);
  r.inputs["rank_max"] = rank_max;
  r.inputs["q_max"] = q_max;
  const auto report = verify_counterexample_classification(rank_max, q_max, opts);
  Json ce = Json::array();
  for (const auto* row : report.counterexamples()) {
    ce.push_back(contribution_row_json(*row));
    r.text.push_back(row->type.to_string() + " over F_" + to_string(row->q) + ": largest " +
                     to_string(row->largest.value()) + ", characteristic part " +
                     to_string(row->characteristic_part.value()));
  }
  for (const auto& row : report.rows) {
    if (!row.consistent()) r.results.push_back(contribution_row_json(row));
  }
  r.extra["counterexamples"] = ce;
  r.extra["rows_checked"] = report.rows.size();
  r.set_verified(report.verified());
}

inline void verify_two_factor_pairs(CommandResult& r, const VerifyBounds& b) {
  const unsigned degree_max = b.degree_max.value_or(30);
  r.inputs["degree_max"] = degree_max;
  const auto found = search_two_factor_pairs(degree_max);
  const auto expected = two_factor_catalog(degree_max);
  for (const auto& c : found) {
    r.results.push_back(class_json(c));
    r.text.push_back(c.to_string());
  }
  r.extra["expected"] = expected.size();
  r.set_verified(found == expected);
}

inline void verify_triples(CommandResult& r, const VerifyBounds& b) {
  const unsigned n_max = b.n_max.value_or(8);
  const unsigned long q_max = b.q_max.value_or(5);
  r.inputs["n_max"] = n_max;
  r.inputs["q_max"] = q_max;
  bool ok = true;
  for (const auto& t : triple_catalog(n_max)) {
    Json row = triple_json(t);
    bool row_ok = true;
    for (const auto& f : prime_powers_up_to(q_max)) row_ok = row_ok && verify_triple(t, f);
    const auto c = triple_to_class(t);
    if (t.family == "SU2n") row_ok = row_ok && c == generator(GeneratorId::B(*t.n)).inverse();
    if (t.family == "SO2n") row_ok = row_ok && c == generator(GeneratorId::D(*t.n));
    row_ok = row_ok && evaluate_word(reduce_to_word(c)) == c;
    row["verified"] = row_ok;
    ok = ok && row_ok;
    r.results.push_back(row);
    r.text.push_back(t.to_string() + (row_ok ? "  ok" : "  MISMATCH"));
  }
  for (const auto& m : verify_maximal_exponent_pairs(n_max)) {
    ok = ok && m.ok();
    if (!m.ok()) r.text.push_back("maximal degree mismatch: " + m.subgroup.to_string() + " in " + m.ambient.to_string());
  }
  r.set_verified(ok);
}

inline void verify_artin_tits(CommandResult& r, const VerifyBounds& b) {
  const unsigned n_max = b.n_max.value_or(6);
  const unsigned long q_max = b.q_max.value_or(9);
  r.inputs["n_max"] = n_max;
  r.inputs["q_max"] = q_max;
  bool ok = true;
  for (const auto& row : artin_tits_check(n_max, q_max)) {
    ok = ok && row.equal();
    r.results.push_back({{"label", row.label}, {"left", to_string(row.left)}, {"right", to_string(row.right)},
                         {"equal", row.equal()}});
    r.text.push_back(row.label + ": " + to_string(row.left) + (row.equal() ? " = " : " != ") + to_string(row.right));
  }
  r.set_verified(ok);
}

inline void verify_valuations(CommandResult& r, const VerifyBounds& b) {
  const unsigned long p_max = b.p_max.value_or(13);
  const long a_max = b.a_max.value_or(12);
  const unsigned n_max = b.n_max.value_or(24);
  r.inputs["p_max"] = p_max;
  r.inputs["a_max"] = a_max;
  r.inputs["n_max"] = n_max;
  std::size_t checked = 0;
  for (unsigned long p = 2; p <= p_max; ++p) {
    if (!is_prime(BigInt(p))) continue;
    for (long a = -a_max; a <= a_max; ++a) {
      for (long bb = -(std::labs(a) - 1); bb <= std::labs(a) - 1; ++bb) {
        if (bb == 0 || std::gcd(a, bb) != 1 || a % static_cast<long>(p) == 0 || bb % static_cast<long>(p) == 0) continue;
        const auto ctx = ValuationContext::make(p, a, bb);
        for (unsigned n = 1; n <= n_max; ++n) {
          ++checked;
          const auto rule = ordp_cyclotomic(ctx, n);
          const auto direct = ordco::detail::direct_ordp_cyclotomic(ctx, n);
          if (rule != direct) {
            r.results.push_back({{"p", p}, {"a", a}, {"b", bb}, {"n", n}, {"rule", rule}, {"direct", direct}});
            r.text.push_back("mismatch p=" + std::to_string(p) + " a=" + std::to_string(a) + " b=" + std::to_string(bb) +
                             " n=" + std::to_string(n));
          }
        }
      }
    }
  }
  r.extra["checked"] = checked;
  r.text.push_back(std::to_string(checked) + " valuations checked");
  r.set_verified(r.results.empty());
}

inline void verify_zsygmondy(CommandResult& r, const VerifyBounds& b, const FactorOptions& opts) {
  const long a_max = b.a_max.value_or(12);
  const unsigned n_max = b.n_max.value_or(30);
  r.inputs["a_max"] = a_max;
  r.inputs["n_max"] = n_max;
  Json exceptions = Json::array();
  bool ok = true;
  for (long a = 2; a <= a_max; ++a) {
    for (unsigned n = 3; n <= n_max; ++n) {
      const auto d = primitive_divisor(BigInt(a), n, opts);
      Json row = {{"a", a}, {"n", n}};
      row["divisor"] = d ? Json(to_string(*d)) : Json(nullptr);
      r.results.push_back(row);
      if (!d) {
        exceptions.push_back({{"a", a}, {"n", n}});
        r.text.push_back("no primitive divisor: a=" + std::to_string(a) + " n=" + std::to_string(n));
        ok = ok && a == 2 && n == 6;
      }
    }
  }
  r.extra["exceptions"] = exceptions;
  r.set_verified(ok);
}

}  // namespace detail

inline CommandResult cmd_verify(const std::string& target, const VerifyBounds& bounds, const FactorOptions& opts) {
  CommandResult r{"verify"};
  r.inputs = bounds.to_json();
  r.inputs["target"] = target;
  if (target == "prop31") {
    detail::verify_largest_contribution(r, bounds, opts);
  } else if (target == "thm42") {
    detail::verify_two_factor_pairs(r, bounds);
  } else if (target == "triples") {
    detail::verify_triples(r, bounds);
  } else if (target == "artin-tits") {
    detail::verify_artin_tits(r, bounds);
  } else if (target == "lemma21") {
    detail::verify_valuations(r, bounds);
  } else if (target == "zsygmondy") {
    detail::verify_zsygmondy(r, bounds, opts);
  } else {
    throw ParseError("verify: unknown target '" + target + "'");
  }
  return r;
}

inline CommandResult cmd_artin_tits(unsigned n_max, unsigned long q_max) {
  CommandResult r{"artin-tits"};
  r.inputs = {{"n_max", n_max}, {"q_max", q_max}};
  VerifyBounds b;
  b.n_max = n_max;
  b.q_max = q_max;
  detail::verify_artin_tits(r, b);
  return r;
}

inline CommandResult cmd_catalog(const std::string& kind, unsigned bound) {
  CommandResult r{"catalog"};
  r.inputs = {{"kind", kind}, {"bound", bound}};
  if (kind == "triples") {
    for (const auto& t : triple_catalog(bound)) {
      r.results.push_back(triple_json(t));
      r.text.push_back(t.to_string() + "  " + triple_to_class(t).to_string());
    }
  } else if (kind == "pairs") {
    for (const auto& c : two_factor_catalog(bound)) {
      r.results.push_back(class_json(c));
      r.text.push_back(c.to_string());
    }
  } else {
    throw ParseError("catalog: unknown kind '" + kind + "'");
  }
  return r;
}

inline CommandResult cmd_cross_char(unsigned max_rank, unsigned long q_max) {
  CommandResult r{"cross-char"};
  r.inputs = {{"rank_max", max_rank}, {"q_max", q_max}};
  for (const auto& h : cross_characteristic_search(max_rank, q_max)) {
    r.results.push_back({{"order", to_string(h.order)}, {"first", candidate_json(h.first)}, {"second", candidate_json(h.second)}});
    r.text.push_back(to_string(h.order) + ": " + h.first.group.to_string() + " over F_" + to_string(h.first.field->q()) +
                     " = " + h.second.group.to_string() + " over F_" + to_string(h.second.field->q()));
  }
  return r;
}

inline CommandResult cmd_atlas_build(unsigned max_rank, const std::vector<unsigned long>& qs,
                                     const std::filesystem::path& path) {
  CommandResult r{"atlas build"};
  Json qj = Json::array();
  for (auto q : qs) qj.push_back(q);
  r.inputs = {{"rank_max", max_rank}, {"q", qj}, {"path", path.string()}};
  const auto atlas = AtlasFile::build(max_rank, qs);
  atlas.save(path);
  r.results.push_back({{"path", path.string()}, {"orders", atlas.entries().size()}});
  r.text.push_back("wrote " + std::to_string(atlas.entries().size()) + " orders to " + path.string());
  return r;
}

}  // namespace ordco::cli
