// Command-line front end: normal forms, Hall queries, exact rank, the
// verification suite, and the commutative image.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qaw/expr.hpp"
#include "qaw/verify.hpp"

namespace {

using json = nlohmann::json;
using namespace qaw;

json scalar_json(const RatFunc& c) {
  return json{{"num", c.num().str()}, {"den", c.den().str()}};
}

json uaw_json(const UawElement& x) {
  json out = json::array();
  for (const auto& [w, c] : x.terms())
    out.push_back(json{{"i", w.i}, {"j", w.j}, {"k", w.k}, {"r", w.r}, {"s", w.s}, {"t", w.t},
                       {"coeff", scalar_json(c)}});
  return out;
}

json free_json(const FreeElement& x) {
  json out = json::array();
  for (const auto& [w, c] : x.terms())
    out.push_back(json{{"word", w.str()}, {"coeff", scalar_json(c)}});
  return out;
}

json series_json(const LieSeries& s) {
  json out = json::array();
  for (const auto& [i, c] : s.terms())
    out.push_back(json{{"index", i}, {"coeff", scalar_json(c)}});
  return out;
}

json comm_json(const CommPoly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms())
    out.push_back(json{{"a", m[0]}, {"b", m[1]}, {"c", m[2]}, {"coeff", scalar_json(c)}});
  return out;
}

json params_json(const Params& p) {
  json out = json::object();
  for (const auto& [k, v] : p) out[k] = v;
  return out;
}

struct Session {
  Uaw uaw;
  HallBasis basis{5};
};

int cmd_nf(Session& s, const std::string& text, bool as_json) {
  UawElement x = eval_delta(*parse_expr(text), s.uaw, s.basis);
  std::cout << (as_json ? uaw_json(x).dump() : x.str()) << "\n";
  return 0;
}

int cmd_expand(Session& s, const std::string& text, bool as_json) {
  FreeElement x = eval_free(*parse_expr(text), s.basis);
  std::cout << (as_json ? free_json(x).dump() : x.str()) << "\n";
  return 0;
}

int cmd_hallcoords(Session& s, const std::string& text, bool as_json) {
  FreeElement x = eval_free(*parse_expr(text), s.basis);
  auto coords = s.basis.coords_by_solve(x);
  if (!coords) {
    std::cout << (as_json ? json{{"in_lie", false}}.dump() : std::string("NotInLie")) << "\n";
    return 1;
  }
  std::cout << (as_json ? json{{"in_lie", true}, {"coords", series_json(*coords)}}.dump()
                        : coords->str())
            << "\n";
  return 0;
}

int cmd_hall(Session& s, int max_len, bool as_json) {
  s.basis.ensure(max_len);
  json arr = json::array();
  for (int i = 1; i <= s.basis.size(); ++i) {
    if (s.basis.length_of(i) > max_len) break;
    if (as_json) {
      arr.push_back(json{{"index", i}, {"tree", s.basis.tree(i)->str()},
                         {"length", s.basis.length_of(i)}});
    } else {
      std::cout << "H" << i << " = " << s.basis.tree(i)->str() << "\n";
    }
  }
  if (as_json) std::cout << arr.dump() << "\n";
  return 0;
}

int cmd_psi(Session& s, const std::string& text, bool as_json) {
  UawElement x = eval_delta(*parse_expr(text), s.uaw, s.basis);
  CommPoly p = s.uaw.psi(x);
  std::cout << (as_json ? comm_json(p).dump() : p.str()) << "\n";
  return 0;
}

int cmd_rank(Session& s, const std::string& path, bool as_json) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return 2;
  }
  json doc = json::parse(in);
  if (!doc.is_array()) {
    std::cerr << "expected a JSON array of expression strings\n";
    return 2;
  }
  std::vector<UawElement> vecs;
  for (const auto& item : doc)
    vecs.push_back(eval_delta(*parse_expr(item.get<std::string>()), s.uaw, s.basis));
  auto basis = basis_from_support(vecs, [](const NormalWord& a, const NormalWord& b) { return b < a; },
                                  NormalWord{});
  ExactMatrix m = expansion_matrix(vecs, basis);
  int r = rank_of(m);
  if (as_json) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m.at(i, c)));
      rows.push_back(std::move(row));
    }
    std::cout << json{{"rank", r},
                      {"vectors", vecs.size()},
                      {"dimension", basis.size()},
                      {"matrix", rows}}
                     .dump()
              << "\n";
  } else {
    std::cout << r << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& pattern, long range, bool as_json) {
  Verifier v;
  SuiteReport rep = v.run_suite(pattern, range);
  if (as_json) {
    json arr = json::array();
    for (const auto& r : rep.results)
      arr.push_back(json{{"check", r.name},
                         {"params", params_json(r.params)},
                         {"passed", r.passed},
                         {"elapsed_ms", r.elapsed_ms},
                         {"witness", r.witness}});
    json factors = json::array();
    for (const auto& [name, count] : rep.pivot_factor_counts)
      factors.push_back(json{{"factor", name}, {"count", count}});
    std::cout << json{{"checks", arr},
                      {"all_passed", rep.all_passed},
                      {"pivot_factors", factors},
                      {"pivot_factors_ok", rep.pivot_factors_ok}}
                     .dump()
              << "\n";
  } else {
    for (const auto& r : rep.results) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (!r.params.empty()) {
        std::cout << "(";
        bool first = true;
        for (const auto& [k, val] : r.params) {
          std::cout << (first ? "" : ",") << k << "=" << val;
          first = false;
        }
        std::cout << ")";
      }
      std::cout << "  [" << static_cast<long>(r.elapsed_ms) << " ms]";
      if (!r.passed) std::cout << "  " << r.witness;
      std::cout << "\n";
    }
    if (!rep.pivot_factor_summary.empty())
      std::cout << rep.pivot_factor_summary
                << (rep.pivot_factors_ok ? " (all in the admissible set)" : " (UNEXPECTED FACTORS)")
                << "\n";
    std::cout << (rep.all_passed ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  }
  return rep.all_passed && rep.pivot_factors_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"universal Askey-Wilson algebra workbench"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  std::string expr_text;
  auto* nf = app.add_subcommand("nf", "normal form of an expression in the algebra");
  nf->add_option("expr", expr_text, "expression")->required();

  auto* expand_cmd = app.add_subcommand("expand", "free-algebra expansion of an expression");
  expand_cmd->add_option("expr", expr_text, "expression")->required();

  auto* hallcoords = app.add_subcommand("hallcoords", "Hall-basis coordinates of an expression");
  hallcoords->add_option("expr", expr_text, "expression")->required();

  int max_len = 4;
  auto* hall = app.add_subcommand("hall", "list Hall basis elements");
  hall->add_option("--max-len", max_len, "maximum length")->check(CLI::Range(1, 8));

  auto* psi = app.add_subcommand("psi", "commutative image of an expression");
  psi->add_option("expr", expr_text, "expression")->required();

  std::string rank_file;
  auto* rank = app.add_subcommand("rank", "exact rank of a family of expressions");
  rank->add_option("--file", rank_file, "JSON array of expression strings")->required();

  std::string suite_pattern = "*";
  long range = 4;
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--suite", suite_pattern, "check-name pattern (* and ? wildcards)");
  verify->add_option("--range", range, "family parameter range")->check(CLI::Range(1L, 8L));

  for (auto* sc : {nf, expand_cmd, hallcoords, hall, psi, rank, verify})
    sc->add_flag("--json", as_json, "emit JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Session session;
    if (*nf) return cmd_nf(session, expr_text, as_json);
    if (*expand_cmd) return cmd_expand(session, expr_text, as_json);
    if (*hallcoords) return cmd_hallcoords(session, expr_text, as_json);
    if (*hall) return cmd_hall(session, max_len, as_json);
    if (*psi) return cmd_psi(session, expr_text, as_json);
    if (*rank) return cmd_rank(session, rank_file, as_json);
    if (*verify) return cmd_verify(suite_pattern, range, as_json);
  } catch (const SyntaxError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const EvalError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
