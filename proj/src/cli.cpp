#include "qtree/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qtree/errors.hpp"
#include "qtree/invariant.hpp"
#include "qtree/presimplicial.hpp"
#include "qtree/tree.hpp"
#include "qtree/verify.hpp"

namespace qtree::cli {

using nlohmann::json;

namespace {

enum class Format { plain, json, latex };

struct Caps {
  std::size_t plane = kDefaultPlaneBound;
  std::size_t top = kDefaultTopBound;
  std::size_t search = kDefaultSearchBound;
};

Caps read_caps() {
  Caps caps;
  if (const char* env = std::getenv(kBoundEnv); env != nullptr && *env != '\0') {
    std::size_t v = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size()) caps = {v, v, v};
  }
  return caps;
}

void require_within(std::size_t size, std::size_t cap) {
  if (size > cap) throw BoundExceeded(size, cap);
}

std::string render(const QPoly& p, Format fmt) {
  if (fmt != Format::latex) return to_plain(p);
  std::string s = to_latex(p);
  if (!p.is_zero()) {
    const auto f = cyclotomic_factor(p);
    if (f.is_cyclotomic_product() && !f.factors.empty()) s += " = " + factorization_latex(f);
  }
  return s;
}

int cmd_q(const std::string& text, const std::string& algo, Format fmt, std::ostream& out) {
  const PlaneTree t = parse_tree(text);
  std::optional<QPoly> rec, st;
  if (algo != "state") rec = q_poly(t);
  if (algo != "recursive") st = q_poly_state(t);
  const bool match = !(rec && st) || *rec == *st;

  if (fmt == Format::json) {
    json j;
    if (algo == "both") {
      j["coeffs"] = coeffs_json(*rec);
      j["state_coeffs"] = coeffs_json(*st);
      j["match"] = match;
    } else {
      j["coeffs"] = coeffs_json(rec ? *rec : *st);
    }
    out << j.dump() << '\n';
  } else if (algo == "both") {
    out << "recursive: " << render(*rec, fmt) << '\n';
    out << "state: " << render(*st, fmt) << '\n';
    if (!match) out << "MISMATCH\n";
  } else {
    out << render(rec ? *rec : *st, fmt) << '\n';
  }
  return match ? kOk : kVerificationFailed;
}

int cmd_q_delayed(const std::string& text, Format fmt, std::ostream& out) {
  const QPoly p = q_poly_delayed(parse_delayed(text));
  if (fmt == Format::json) {
    out << json{{"coeffs", coeffs_json(p)}}.dump() << '\n';
  } else {
    out << render(p, fmt) << '\n';
  }
  return kOk;
}

int report_summary(const std::string& family, const VerifySummary& s, Format fmt, std::ostream& out) {
  if (fmt == Format::json) {
    out << json{{"family", family},
                {"unit", s.unit},
                {"checked", s.checked},
                {"violations", s.violations}}
               .dump()
        << '\n';
  } else {
    out << "checked " << s.checked << ' ' << s.unit << ", " << s.violations.size() << " violations\n";
    for (const auto& v : s.violations) out << "violation: " << v << '\n';
  }
  return s.ok() ? kOk : kVerificationFailed;
}

int report_identities(const IdentityReport& r, Format fmt, std::ostream& out) {
  if (fmt == Format::json) {
    json violations = json::array();
    for (const auto& v : r.violations) {
      violations.push_back({{"tree", v.tree}, {"relation", v.relation}, {"i", v.i}, {"j", v.j}});
    }
    json j{{"family", "presimplicial"}, {"checked", r.checked}, {"violations", violations}};
    if (r.has_witness) {
      j["witness"] = {{"tree", r.witness_tree},
                      {"i", r.witness_index},
                      {"s_i_s_i", r.witness_lhs},
                      {"s_i1_s_i", r.witness_rhs}};
    } else {
      j["witness"] = nullptr;
    }
    out << j.dump() << '\n';
    return r.ok() ? kOk : kVerificationFailed;
  }
  std::size_t total = 0;
  for (const auto& [family, n] : r.checked) {
    out << "relation (" << family << "): checked " << n << '\n';
    total += n;
  }
  out << "checked " << total << " instances, " << r.violations.size() << " violations\n";
  for (const auto& v : r.violations) {
    out << "violation: " << v.relation << " on " << v.tree << " i=" << v.i << " j=" << v.j << '\n';
  }
  if (r.has_witness) {
    const auto i = r.witness_index;
    out << "witness: s_" << i << " s_" << i << "(" << r.witness_tree << ") = " << r.witness_lhs << " != "
        << r.witness_rhs << " = s_" << i + 1 << " s_" << i << "(" << r.witness_tree << ")\n";
  } else {
    out << "no s_i s_i != s_{i+1} s_i witness found\n";
  }
  return r.ok() ? kOk : kVerificationFailed;
}

int cmd_verify(const std::string& family, std::optional<std::size_t> max_size, std::uint64_t seed, Format fmt,
               const Caps& caps, std::ostream& out) {
  if (family == "presimplicial") {
    const std::size_t n = max_size.value_or(kDefaultTopBound);
    require_within(n, caps.top);
    return report_identities(check_identities(n, std::max(n, kDefaultTopBound)), fmt, out);
  }
  const std::size_t n = max_size.value_or(8);
  require_within(n, caps.plane);
  VerifySummary s;
  if (family == "wedge") s = verify_wedge(n);
  if (family == "state") s = verify_state(n, seed);
  if (family == "reroot") s = verify_reroot(n);
  if (family == "block") s = verify_block(n, seed);
  return report_summary(family, s, fmt, out);
}

int cmd_search(const std::vector<std::string>& coeff_text, std::size_t max_edges, Format fmt, const Caps& caps,
               std::ostream& out, std::ostream& err) {
  std::vector<Integer> coeffs;
  for (const auto& c : coeff_text) {
    Integer v;
    if (v.set_str(c, 10) != 0) throw Error("bad coefficient '" + c + "'");
    coeffs.push_back(v);
  }
  require_within(max_edges, caps.search);
  const QPoly target(std::move(coeffs));
  const auto found = search_delayed(target, max_edges, std::max(max_edges, kDefaultSearchBound));
  if (fmt == Format::json) {
    json w = json::array();
    for (const auto& d : found) w.push_back(serialize(d));
    out << json{{"target", coeffs_json(target)}, {"max_edges", max_edges}, {"witnesses", w}}.dump() << '\n';
  } else {
    for (const auto& d : found) out << serialize(d) << '\n';
  }
  err << "found " << found.size() << " delayed trees with Q = " << to_plain(target) << '\n';
  return found.empty() ? kVerificationFailed : kOk;
}

int cmd_reduce(const std::string& text, Format fmt, std::ostream& out) {
  const TopTree t(parse_tree(text));
  const QPoly reduced = reduce_to_point(t);
  const std::size_t n = t.leaf_count();
  const QPoly expected = q_factorial(n);
  const bool match = reduced == expected;
  if (fmt == Format::json) {
    out << json{{"tree", serialize(t)},
                {"leaves", n},
                {"coeffs", coeffs_json(reduced)},
                {"factorial_coeffs", coeffs_json(expected)},
                {"match", match}}
               .dump()
        << '\n';
  } else {
    out << render(reduced, fmt);
    if (match) {
      out << " (= [" << n << "]_q!)\n";
    } else {
      out << " (expected [" << n << "]_q! = " << render(expected, fmt) << ")\n";
    }
  }
  return match ? kOk : kVerificationFailed;
}

int cmd_enumerate(const std::string& kind, std::size_t size, Format fmt, const Caps& caps, std::ostream& out) {
  std::vector<std::string> listing;
  if (kind == "plane") {
    require_within(size, caps.plane);
    for (const auto& t : enumerate_plane_trees(size, caps.plane)) listing.push_back(serialize(t));
  } else {
    require_within(size, caps.top);
    for (const auto& t : enumerate_top_trees(size, caps.top)) listing.push_back(serialize(t));
  }
  if (fmt == Format::json) {
    out << json{{"kind", kind}, {"size", size}, {"count", listing.size()}, {"trees", listing}}.dump() << '\n';
  } else {
    out << "count " << listing.size() << '\n';
    for (const auto& s : listing) out << s << '\n';
  }
  return kOk;
}

}  // namespace

json coeffs_json(const QPoly& p) {
  static const Integer safe = (Integer(1) << 53) - 1;
  json arr = json::array();
  for (const auto& c : p.coeffs()) {
    if (abs(c) <= safe) {
      arr.push_back(c.get_si());
    } else {
      arr.push_back(c.get_str());
    }
  }
  return arr;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-polynomials of plane rooted trees", "qtree"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{
      {"plain", Format::plain}, {"json", Format::json}, {"latex", Format::latex}};
  Format fmt = Format::plain;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", fmt, "plain, json or latex")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  std::string tree_text;
  std::string algo = "recursive";
  auto* q = app.add_subcommand("q", "Q(T) of a plane tree");
  q->add_option("tree", tree_text, "tree, e.g. \"(.(..))\"")->required();
  q->add_option("--algo", algo, "recursive, state or both")
      ->check(CLI::IsMember({"recursive", "state", "both"}));
  add_format(q);

  auto* qd = app.add_subcommand("q-delayed", "Q(T,f) of a tree with leaf delays");
  qd->add_option("tree", tree_text, "delayed tree, e.g. \"(1 2)\"")->required();
  add_format(qd);

  std::string family;
  std::optional<std::size_t> max_size;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "check an identity family exhaustively or by sampling");
  verify->add_option("family", family, "wedge, state, reroot, block or presimplicial")
      ->required()
      ->check(CLI::IsMember({"wedge", "state", "reroot", "block", "presimplicial"}));
  verify->add_option("--max-size", max_size, "edges (plane families) or leaves (presimplicial)");
  verify->add_option("--seed", seed, "seed for sampled families");
  add_format(verify);

  std::vector<std::string> target;
  std::size_t max_edges = 4;
  auto* search = app.add_subcommand("search-delayed", "find delayed trees with a given Q(T,f)");
  search->add_option("coeffs", target, "ascending coefficients of the target")->required();
  search->add_option("--max-edges", max_edges, "largest tree size searched");
  add_format(search);

  auto* reduce = app.add_subcommand("reduce", "reduce a tree to a multiple of the point");
  reduce->add_option("tree", tree_text)->required();
  add_format(reduce);

  std::string kind;
  std::size_t size = 0;
  auto* enumerate = app.add_subcommand("enumerate", "list plane or topological trees");
  enumerate->add_option("kind", kind, "plane or topological")
      ->required()
      ->check(CLI::IsMember({"plane", "topological"}));
  enumerate->add_option("--size", size, "edges (plane) or leaves (topological)")->required();
  add_format(enumerate);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  const Caps caps = read_caps();
  try {
    if (q->parsed()) return cmd_q(tree_text, algo, fmt, out);
    if (qd->parsed()) return cmd_q_delayed(tree_text, fmt, out);
    if (verify->parsed()) return cmd_verify(family, max_size, seed, fmt, caps, out);
    if (search->parsed()) return cmd_search(target, max_edges, fmt, caps, out, err);
    if (reduce->parsed()) return cmd_reduce(tree_text, fmt, out);
    if (enumerate->parsed()) return cmd_enumerate(kind, size, fmt, caps, out);
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace qtree::cli
