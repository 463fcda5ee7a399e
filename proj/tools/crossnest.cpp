#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "crossnest/checks.hpp"
#include "crossnest/counting.hpp"
#include "crossnest/format.hpp"
#include "crossnest/partition.hpp"
#include "crossnest/series.hpp"
#include "crossnest/tableaux.hpp"
#include "crossnest/variants.hpp"

using namespace crossnest;
using nlohmann::json;

namespace {

BigCount bell_number(int n) {
  std::vector<BigCount> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<BigCount> next{row.back()};
    for (const BigCount& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

void guard_work(const BigCount& estimate, long max_work) {
  if (estimate > BigCount(max_work))
    throw Infeasible("estimated " + estimate.get_str() + " objects exceeds --max-work " +
                     std::to_string(max_work));
}

BigCount factorial(int n) {
  BigCount f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void emit(bool as_json, const json& payload, const std::string& text) {
  if (as_json)
    std::cout << payload.dump() << "\n";
  else
    std::cout << text << "\n";
}

json series_json(const std::vector<BigCount>& seq) {
  json arr = json::array();
  for (const BigCount& v : seq) arr.push_back(v.get_str());
  return arr;
}

json poly_json(const IntPoly& p) {
  json arr = json::array();
  for (const BigCount& v : p.c) arr.push_back(v.get_str());
  return arr;
}

// Input literals are arguments: any failure to make sense of one is an
// argument error, not an internal one.
template <class F>
auto parse_argument(F&& f) {
  try {
    return f();
  } catch (const ParseFailure&) {
    throw;
  } catch (const Error& e) {
    throw ParseFailure(e.what());
  }
}

checks::CheckResult run_named_check(const std::string& name, std::optional<int> n,
                                    std::optional<int> r, std::optional<int> N) {
  using namespace checks;
  if (name == "c2-sequence") return c2_sequence();
  if (name == "c2-triple") return c2_triple(n.value_or(8), N.value_or(12));
  if (name == "c2-recurrence") {
    int n3 = N.value_or(100);
    return c2_recurrence(n3, std::min(50, n3));
  }
  if (name == "fib-walks") return fib_walks(N.value_or(n.value_or(7)));
  if (name == "gf-golden") return gf_golden();
  if (name == "poly-table") {
    int t = n.value_or(8);
    return poly_table(t, std::min(t, 7));
  }
  if (name == "symmetry") return symmetry(n.value_or(6), r.value_or(2));
  if (name == "bijection") return bijection(n.value_or(5), r.value_or(2));
  if (name == "transpose") return transpose(n.value_or(5), r.value_or(2));
  if (name == "rimhook") return rimhook(n.value_or(5));
  if (name == "variants") {
    int m = n.value_or(4);
    return variants(m, std::min(m, 3), r.value_or(2), 7, 5);
  }
  if (name == "reflection") return reflection(N.value_or(30), 50, 20);
  if (name == "fit-rediscovery") return fit_rediscovery();
  if (name == "scope-asymptotics") return scope_asymptotics();
  throw ParseFailure("unknown check '" + name + "'");
}

std::optional<int> opt_of(const CLI::Option* o, int v) {
  if (o->count() == 0) return std::nullopt;
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact crossing and nesting statistics of colored set partitions"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  long max_work = 50'000'000;
  app.add_option("--max-work", max_work, "cap on enumerated objects");

  int n = 0, r = 1, j = 0, k = 0, N = 0;
  bool nc = false, ncn = false, brute = false;

  auto* count_cmd = app.add_subcommand("count", "count colored partitions with bounded statistics");
  count_cmd->fallthrough();
  count_cmd->add_flag("--nc", nc, "noncrossing (no 2-crossing), nestings free");
  count_cmd->add_flag("--ncn", ncn, "bound crossings by -j and nestings by -k");
  auto* count_j = count_cmd->add_option("-j", j, "forbid j-crossings");
  auto* count_k = count_cmd->add_option("-k", k, "forbid k-nestings");
  count_cmd->add_option("-r", r, "number of colors");
  count_cmd->add_option("-n", n, "ground set size")->required();
  count_cmd->add_flag("--brute", brute, "count by exhaustive enumeration");

  auto* series_cmd = app.add_subcommand("series", "counting sequence for n = 0..N");
  series_cmd->fallthrough();
  series_cmd->add_flag("--nc", nc, "noncrossing counts");
  series_cmd->add_flag("--ncn", ncn, "bound crossings by -j and nestings by -k");
  auto* series_j = series_cmd->add_option("-j", j, "forbid j-crossings");
  auto* series_k = series_cmd->add_option("-k", k, "forbid k-nestings");
  series_cmd->add_option("-r", r, "number of colors");
  series_cmd->add_option("-N", N, "last index")->required();

  auto* gf_cmd = app.add_subcommand("gf", "rational generating function of the walk counts");
  gf_cmd->fallthrough();
  gf_cmd->add_option("-j", j, "forbid j-crossings")->required();
  gf_cmd->add_option("-k", k, "forbid k-nestings")->required();
  gf_cmd->add_option("-r", r, "number of colors");

  auto* poly_cmd = app.add_subcommand("poly", "count as a polynomial in the number of colors");
  poly_cmd->fallthrough();
  poly_cmd->add_flag("--nc", nc, "noncrossing counts");
  auto* poly_j = poly_cmd->add_option("-j", j, "forbid j-crossings");
  auto* poly_k = poly_cmd->add_option("-k", k, "forbid k-nestings");
  poly_cmd->add_option("-n", n, "ground set size")->required();

  std::string input;
  bool inverse = false;
  auto* biject_cmd = app.add_subcommand("biject", "partition to vacillating tableau and back");
  biject_cmd->fallthrough();
  biject_cmd->add_option("input", input, "partition literal (text or JSON), or a tableau with --inverse")
      ->required();
  biject_cmd->add_flag("--inverse", inverse, "recover the partition of a tableau");

  std::string check_name = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run a named exactness check, or all of them");
  verify_cmd->fallthrough();
  verify_cmd->add_option("check", check_name, "check name, or 'all'");
  auto* verify_n = verify_cmd->add_option("-n", n, "size override");
  auto* verify_r = verify_cmd->add_option("-r", r, "color override");
  auto* verify_N = verify_cmd->add_option("-N", N, "length override");

  std::string series_literal;
  int terms = 30, max_order = 2, max_degree = 2;
  auto* fit_cmd = app.add_subcommand("fit", "smallest polynomial recurrence fitting a sequence");
  fit_cmd->fallthrough();
  fit_cmd->add_option("series", series_literal, "comma-separated terms (else computed)");
  fit_cmd->add_flag("--nc", nc, "fit the noncrossing counts");
  fit_cmd->add_flag("--ncn", ncn, "fit the bounded-statistics counts");
  auto* fit_j = fit_cmd->add_option("-j", j, "forbid j-crossings");
  auto* fit_k = fit_cmd->add_option("-k", k, "forbid k-nestings");
  fit_cmd->add_option("-r", r, "number of colors");
  fit_cmd->add_option("--terms", terms, "number of computed terms");
  fit_cmd->add_option("--max-order", max_order, "largest recurrence order tried");
  fit_cmd->add_option("--max-degree", max_degree, "largest coefficient degree tried");

  std::string kind = "partitions", tclass = "vacillating";
  int length = 0, max_rows = 0, max_cols = 0;
  auto* enum_cmd = app.add_subcommand("enumerate", "list objects, one literal per line");
  enum_cmd->fallthrough();
  enum_cmd->add_option("--kind", kind, "partitions, matchings, complete-matchings, enhanced, "
                                       "permutations, tangled, or tableaux")
      ->check(CLI::IsMember({"partitions", "matchings", "complete-matchings", "enhanced",
                             "permutations", "tangled", "tableaux"}));
  enum_cmd->add_option("-n", n, "ground set size");
  enum_cmd->add_option("-r", r, "number of colors");
  enum_cmd->add_option("--length", length, "tableau length");
  enum_cmd->add_option("--class", tclass, "tableau class")
      ->check(CLI::IsMember({"semi-oscillating", "vacillating", "oscillating"}));
  auto* enum_rows = enum_cmd->add_option("--max-rows", max_rows, "row bound per component");
  auto* enum_cols = enum_cmd->add_option("--max-cols", max_cols, "column bound per component");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  bool as_json = format == "json";
  try {
    if (count_cmd->parsed() || series_cmd->parsed()) {
      if (nc == ncn) throw ParseFailure("pass exactly one of --nc / --ncn");
      bool has_j = count_j->count() || series_j->count();
      bool has_k = count_k->count() || series_k->count();
      if (ncn && (!has_j || !has_k)) throw ParseFailure("--ncn needs both -j and -k");
      if (nc && (has_j || has_k)) throw ParseFailure("--nc fixes the bounds; drop -j/-k");
    }
    if (count_cmd->parsed()) {
      BigCount c;
      if (brute) {
        guard_work(bell_number(n) * big_pow(r, static_cast<unsigned long>(n)), max_work);
        c = nc ? count_ncn_brute(n, r, 2, std::nullopt)
               : count_ncn_brute(n, r, j, k);
      } else {
        c = nc ? count_colored_nc(r, n) : count_ncn_walks(j, k, r, n);
      }
      emit(as_json, json{{"count", c.get_str()}}, c.get_str());
    } else if (series_cmd->parsed()) {
      std::vector<BigCount> seq = nc ? nc_series(r, N) : ncn_series(j, k, r, N);
      emit(as_json, json{{"series", series_json(seq)}}, print_series(seq));
    } else if (gf_cmd->parsed()) {
      RationalGF f = gf_from_graph(build_multigraph(j, k, r));
      emit(as_json, json{{"num", poly_json(f.num)}, {"den", poly_json(f.den)}}, print_gf(f));
    } else if (poly_cmd->parsed()) {
      std::optional<int> jb = opt_of(poly_j, j), kb = opt_of(poly_k, k);
      if (nc) {
        if (jb || kb) throw ParseFailure("--nc fixes the bounds; drop -j/-k");
        jb = 2;
      } else if (!jb && !kb) {
        throw ParseFailure("pass --nc or at least one of -j / -k");
      }
      IntPoly p = ncn_poly_in_r(n, jb, kb);
      emit(as_json, json{{"poly", poly_json(p)}}, print_poly(p, 'r'));
    } else if (biject_cmd->parsed()) {
      if (inverse) {
        RPartiteTableau t = parse_argument([&] { return parse_tableau(input); });
        if (t.length() % 2 != 0) throw ParseFailure("a vacillating tableau has even length");
        int half = t.length() / 2;
        guard_work(bell_number(half) * big_pow(t.r, static_cast<unsigned long>(half)), max_work);
        classify(t);
        auto cp = invert_vacillating(t);
        if (!cp) throw Infeasible("tableau is not the image of any colored partition");
        emit(as_json, json{{"partition", json::parse(partition_json(*cp))}},
             print_partition(*cp));
      } else {
        ColoredSetPartition cp = parse_argument([&] {
          return input.starts_with("{") ? parse_partition_json(input) : parse_partition(input);
        });
        RPartiteTableau t = to_vacillating(cp);
        emit(as_json, json{{"tableau", print_tableau(t)}}, print_tableau(t));
      }
    } else if (verify_cmd->parsed()) {
      std::optional<int> on = opt_of(verify_n, n), orr = opt_of(verify_r, r),
                         oN = opt_of(verify_N, N);
      json results = json::array();
      bool all_pass = true;
      std::string text;
      if (check_name == "all") {
        for (const auto& c : checks::all_checks()) {
          checks::CheckResult res = c.run();
          all_pass = all_pass && res.pass;
          results.push_back({{"name", c.name}, {"pass", res.pass}, {"detail", res.detail}});
          text += c.name + ": " + (res.pass ? "PASS" : "FAIL: " + res.detail) + "\n";
        }
        if (!text.empty()) text.pop_back();
      } else {
        checks::CheckResult res = run_named_check(check_name, on, orr, oN);
        all_pass = res.pass;
        results.push_back({{"name", check_name}, {"pass", res.pass}, {"detail", res.detail}});
        text = res.pass ? "PASS" : "FAIL: " + res.detail;
      }
      emit(as_json, json{{"checks", results}}, text);
      return all_pass ? 0 : 1;
    } else if (fit_cmd->parsed()) {
      std::vector<BigCount> seq;
      if (!series_literal.empty()) {
        if (nc || ncn) throw ParseFailure("pass either a literal sequence or --nc/--ncn");
        std::vector<BigCount> out;
        std::string tok;
        std::istringstream in(series_literal);
        while (std::getline(in, tok, ',')) {
          std::erase_if(tok, [](unsigned char c) { return std::isspace(c); });
          std::size_t from = tok.starts_with("-") ? 1 : 0;
          if (tok.size() == from || tok.find_first_not_of("0123456789", from) != std::string::npos)
            throw ParseFailure("expected an integer term, got '" + tok + "'");
          out.push_back(BigCount(tok));
        }
        seq = std::move(out);
      } else {
        if (nc == ncn) throw ParseFailure("pass exactly one of --nc / --ncn, or a sequence");
        if (ncn && (!fit_j->count() || !fit_k->count()))
          throw ParseFailure("--ncn needs both -j and -k");
        if (terms < 1) throw ParseFailure("--terms must be positive");
        seq = nc ? nc_series(r, terms - 1) : ncn_series(j, k, r, terms - 1);
      }
      auto rec = fit_p_recurrence(seq, max_order, max_degree);
      json payload{{"recurrence", rec ? json(print_recurrence(*rec)) : json(nullptr)}};
      emit(as_json, payload, rec ? print_recurrence(*rec) : "no recurrence found");
    } else if (enum_cmd->parsed()) {
      std::vector<std::string> lines;
      BigCount colored = big_pow(r, static_cast<unsigned long>(n));
      if (kind == "partitions") {
        guard_work(bell_number(n) * colored, max_work);
        for (const auto& p : colored_partitions_of(n, r)) lines.push_back(print_partition(p));
      } else if (kind == "matchings") {
        guard_work(bell_number(n) * colored, max_work);
        for (const auto& m : enumerate_matchings(n, r)) lines.push_back(print_partition(m));
      } else if (kind == "complete-matchings") {
        guard_work(bell_number(n) * colored, max_work);
        for (const auto& m : enumerate_complete_matchings(n, r))
          lines.push_back(print_partition(m));
      } else if (kind == "enhanced") {
        guard_work(bell_number(n) * colored, max_work);
        for (const auto& e : enumerate_enhanced(n, r)) lines.push_back(print_enhanced(e));
      } else if (kind == "permutations") {
        guard_work(factorial(n) * colored, max_work);
        for (const auto& s : enumerate_permutations(n, r)) lines.push_back(print_permutation(s));
      } else if (kind == "tangled") {
        guard_work(bell_number(2 * n) * colored, max_work);
        for (const auto& t : enumerate_tangled(n, r)) lines.push_back(print_tangled(t));
      } else {
        TableauClass cls = tclass == "vacillating" ? TableauClass::vacillating
                           : tclass == "oscillating" ? TableauClass::oscillating
                                                     : TableauClass::semi_oscillating;
        int half = cls == TableauClass::vacillating ? length / 2 : length;
        guard_work(bell_number(half) * big_pow(r, static_cast<unsigned long>(half)), max_work);
        for (const auto& t : enumerate_tableaux(length, r, cls, opt_of(enum_rows, max_rows),
                                                opt_of(enum_cols, max_cols)))
          lines.push_back(print_tableau(t));
      }
      std::string text;
      for (const std::string& line : lines) text += line + "\n";
      if (as_json) {
        emit(true, json{{"items", lines}}, "");
      } else {
        std::cout << text;
      }
    }
  } catch (const ParseFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
