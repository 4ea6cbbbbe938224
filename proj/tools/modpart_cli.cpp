// modpart: command-line front end for the counting library.
//
// Exit codes: 0 on success, 1 when a verify or oeis-check run finds a
// disagreement, 2 for invalid input or a runtime error.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "modpart/modpart.hpp"
#ifdef MODPART_HAVE_CURL
#include "modpart/fetch.hpp"
#endif

namespace {

using namespace modpart;
using nlohmann::json;

constexpr int kExitMismatch = 1;
constexpr int kExitError = 2;

struct Globals {
  bool json = false;
  unsigned threads = 1;
  u64 budget = kDefaultBudget;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

u64 parse_u64(const std::string& s, const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    if (s.empty() || s[0] == '-') throw std::invalid_argument(s);
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != s.size()) throw std::invalid_argument(std::string(what) + ": '" + s + "' is not a nonnegative integer");
  return v;
}

i64 parse_i64(const std::string& s, const char* what) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != s.size()) throw std::invalid_argument(std::string(what) + ": '" + s + "' is not an integer");
  return v;
}

void print_matrix_text(std::ostream& os, const DivisorMatrix& m) {
  const auto rows = m.rows_as_strings();
  std::size_t width = 1;
  for (const auto& r : rows)
    for (const auto& e : r) width = std::max(width, e.size());
  for (u64 d : m.divisors()) width = std::max(width, std::to_string(d).size());
  os << std::setw(static_cast<int>(width)) << "" << " |";
  for (u64 d : m.divisors()) os << ' ' << std::setw(static_cast<int>(width)) << d;
  os << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << std::setw(static_cast<int>(width)) << m.divisors()[i] << " |";
    for (const auto& e : rows[i]) os << ' ' << std::setw(static_cast<int>(width)) << e;
    os << '\n';
  }
}

// Entries where `a` and `b` differ, as (row divisor, column divisor, a, b).
json matrix_diff(const DivisorMatrix& a, const DivisorMatrix& b) {
  json out = json::array();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a(i, j) != b(i, j))
        out.push_back({{"row", a.divisors()[i]}, {"col", a.divisors()[j]}, {"found", a(i, j).str()},
                       {"expected", b(i, j).str()}});
  return out;
}

#ifndef MODPART_HAVE_CURL
std::string fetch_bfile(const std::string&) {
  throw std::runtime_error("fetch: this build has no libcurl support");
}
#endif

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of k-subsets of Z/nZ and of finite abelian groups with a prescribed sum"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON instead of text")->envname("MODPART_JSON");
  app.add_option("--threads", g.threads, "Worker threads for seq and verify")
      ->envname("MODPART_THREADS")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--budget", g.budget, "Maximum number of subsets a brute-force oracle may enumerate")
      ->envname("MODPART_BUDGET");

  // tnks
  auto* tnks = app.add_subcommand("tnks", "Number of k-subsets of Z/n summing to s mod n");
  std::string tn, tk, ts;
  tnks->add_option("n", tn)->required();
  tnks->add_option("k", tk)->required();
  tnks->add_option("s", ts)->required();

  // matrix
  auto* matrix = app.add_subcommand("matrix", "Print the divisor matrix M(k)");
  u64 mk = 1;
  bool charpoly = false;
  matrix->add_option("k", mk)->required()->check(CLI::PositiveNumber);
  matrix->add_flag("--charpoly", charpoly, "Also print the characteristic polynomial");

  // seq
  auto* seq = app.add_subcommand("seq", "Emit T(n,k,s) over a range of n as a b-file or JSON");
  u64 sk = 1;
  i64 ss = 0, soffset = 0;
  u64 sfrom = 0, sto = 0;
  std::string sformat = "bfile";
  seq->add_option("k", sk)->required()->check(CLI::PositiveNumber);
  seq->add_option("s", ss)->required();
  auto* from_opt = seq->add_option("--from", sfrom, "First n (default k)");
  auto* to_opt = seq->add_option("--to", sto, "Last n (default first n + 29)");
  auto* offset_opt = seq->add_option("--offset", soffset, "Index printed for the first term (default: first n)");
  seq->add_option("--format", sformat)->check(CLI::IsMember({"bfile", "json"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Run identity and oracle sweeps; prints a JSON report");
  std::string suite = "all";
  bool quick = false;
  verify->add_option("suite", suite)->check(CLI::IsMember({"matrices", "counts", "series", "abelian", "all"}));
  verify->add_flag("--quick", quick, "Reduced depths");
  struct DepthOpt {
    const char* flag;
    const char* env;
    u64 VerifyDepths::*field;
    const char* help;
  };
  const DepthOpt depth_opts[] = {
      {"--kmax", "MODPART_KMAX", &VerifyDepths::kmax, "Largest k for the matrix property sweep"},
      {"--kron-max", "MODPART_KRON_MAX", &VerifyDepths::kron_max, "Largest k1*k2 for Kronecker checks"},
      {"--entry-kmax", "MODPART_ENTRY_KMAX", &VerifyDepths::entry_kmax, "Largest k for entry identities"},
      {"--nmax", "MODPART_NMAX", &VerifyDepths::nmax, "Largest n for the brute-force comparison"},
      {"--identity-nmax", "MODPART_IDENTITY_NMAX", &VerifyDepths::identity_nmax, "Largest n for count identities"},
      {"--series-kmax", "MODPART_SERIES_KMAX", &VerifyDepths::series_kmax, "Largest k for generating series"},
      {"--discover-kmax", "MODPART_DISCOVER_KMAX", &VerifyDepths::discover_kmax, "Largest k for rediscovery"},
      {"--group-order-max", "MODPART_GROUP_ORDER_MAX", &VerifyDepths::group_order_max, "Largest group order"},
      {"--multiset-order-max", "MODPART_MULTISET_ORDER_MAX", &VerifyDepths::multiset_order_max,
       "Largest group order for multisets"},
      {"--multiset-kmax", "MODPART_MULTISET_KMAX", &VerifyDepths::multiset_kmax, "Largest multiset size"},
      {"--cyclic-nmax", "MODPART_CYCLIC_NMAX", &VerifyDepths::cyclic_nmax, "Largest n for cyclic-group checks"},
  };
  std::vector<std::pair<CLI::Option*, u64>> depth_values(std::size(depth_opts));
  for (std::size_t i = 0; i < std::size(depth_opts); ++i)
    depth_values[i].first = verify->add_option(depth_opts[i].flag, depth_values[i].second, depth_opts[i].help)
                                ->envname(depth_opts[i].env);

  // discover
  auto* discover = app.add_subcommand("discover", "Recover M(k) from counts with smaller subset sizes");
  u64 dk = 1, ceiling = kDefaultDiscoveryCeiling;
  discover->add_option("k", dk)->required()->check(CLI::PositiveNumber);
  discover->add_option("--ceiling", ceiling, "Largest k accepted")->envname("MODPART_DISCOVER_CEILING");

  // abelian
  auto* abelian = app.add_subcommand("abelian", "Subsets or multisets of a finite abelian group with a given sum");
  std::string afactors, aelem, amode = "set";
  u64 ak = 0;
  abelian->add_option("factors", afactors, "Cyclic orders, e.g. 4,2")->required();
  abelian->add_option("k", ak)->required();
  abelian->add_option("a", aelem, "Coordinates of the target sum, e.g. 1,0")->required();
  abelian->add_option("mode", amode)->check(CLI::IsMember({"set", "multiset"}));

  // conics
  auto* conics = app.add_subcommand("conics", "Zero-sum 6-subsets split into line pairs and irreducible conics");
  u64 cn = 9, cto = 0;
  conics->add_option("n", cn)->required();
  auto* cto_opt = conics->add_option("--to", cto, "Last n of a range");

  // oeis-check
  auto* oeis = app.add_subcommand("oeis-check", "Compare a b-file with the computed sequence");
  std::string fixture_path, seq_id;
  bool fetch = false;
  u64 ok = 0;
  i64 os_ = 0, ooffset = 0;
  int window = 3;
  auto* fixture_opt = oeis->add_option("--fixture", fixture_path, "Local b-file")->check(CLI::ExistingFile);
  auto* id_opt = oeis->add_option("--id", seq_id, "Sequence id, e.g. A011796");
  oeis->add_flag("--fetch", fetch, "Download the b-file for --id");
  auto* ok_opt = oeis->add_option("--k", ok, "Subset size");
  auto* os_opt = oeis->add_option("--s", os_, "Residue");
  auto* ooffset_opt = oeis->add_option("--offset", ooffset, "Fixture index of the term n = k");
  oeis->add_option("--window", window, "Shift search window")->check(CLI::Range(0, 3));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*tnks) {
      const CountQuery q{parse_u64(tn, "n"), parse_u64(tk, "k"), parse_i64(ts, "s")};
      const Int t = subset_count(q);
      if (g.json)
        std::cout << json{{"n", q.n}, {"k", q.k}, {"s", q.s}, {"count", t.str()}}.dump() << '\n';
      else
        std::cout << t << '\n';
      return 0;
    }

    if (*matrix) {
      const DivisorMatrix m = build_matrix(mk);
      if (g.json) {
        json j = to_json(m);
        if (charpoly) j["charpoly"] = characteristic_polynomial(m).str();
        std::cout << j.dump() << '\n';
      } else {
        print_matrix_text(std::cout, m);
        if (charpoly) std::cout << "charpoly: " << characteristic_polynomial(m).str() << '\n';
      }
      return 0;
    }

    if (*seq) {
      SequenceSpec spec = SequenceSpec::starting_at_k(sk, ss, sk + 29);
      if (from_opt->count()) spec.n_start = sfrom;
      spec.n_end = to_opt->count() ? sto : spec.n_start + 29;
      spec.offset = offset_opt->count() ? soffset : static_cast<i64>(spec.n_start);
      const auto terms = generate_terms(spec, g.threads);
      if (g.json || sformat == "json")
        std::cout << sequence_json(spec, terms).dump() << '\n';
      else
        write_bfile(std::cout, terms);
      return 0;
    }

    if (*verify) {
      VerifyDepths d = quick ? VerifyDepths::quick() : VerifyDepths{};
      for (std::size_t i = 0; i < depth_values.size(); ++i)
        if (depth_values[i].first->count()) d.*(depth_opts[i].field) = depth_values[i].second;
      d.budget = g.budget;
      d.threads = g.threads;
      const Report r = verify_suite(suite, d);
      std::cout << to_json(r).dump(g.json ? -1 : 2) << '\n';
      std::cerr << r.suite << ": " << r.cases << " cases, " << r.failures.size() << " failures\n";
      return r.passed() ? 0 : kExitMismatch;
    }

    if (*discover) {
      const DiscoveryResult res = discover_matrix(dk, ceiling);
      const DivisorMatrix reference = build_matrix(dk);
      const json diff = matrix_diff(res.matrix, reference);
      if (g.json) {
        json j = to_json(res.matrix);
        j["unique"] = res.unique;
        j["equations"] = res.equations;
        j["unknowns"] = res.unknowns;
        j["rank"] = res.rank;
        j["pivot_columns"] = res.pivot_columns;
        j["diff"] = diff;
        std::cout << j.dump() << '\n';
      } else {
        print_matrix_text(std::cout, res.matrix);
        std::cout << (res.unique ? "unique" : "not unique") << " (rank " << res.rank << " of " << res.unknowns
                  << " unknowns, " << res.equations << " equations)\n";
        if (diff.empty())
          std::cout << "diff: none\n";
        else
          for (const auto& e : diff)
            std::cout << "diff: [" << e["row"] << "," << e["col"] << "] found " << e["found"].get<std::string>()
                      << ", expected " << e["expected"].get<std::string>() << '\n';
      }
      return diff.empty() ? 0 : kExitMismatch;
    }

    if (*abelian) {
      std::vector<u64> orders;
      for (const auto& f : split(afactors, ',')) orders.push_back(parse_u64(f, "factor"));
      std::vector<i64> coords;
      for (const auto& c : split(aelem, ',')) coords.push_back(parse_i64(c, "coordinate"));
      require(!orders.empty(), "abelian: no factors given");
      const AbelianGroup grp = AbelianGroup::canonical(orders);
      if (grp.invariant_factors() != orders)
        std::cerr << "note: " << afactors << " rewritten in invariant-factor form as " << grp.str() << '\n';
      const GroupElement a = canonical_element(orders, coords);
      const Int t = amode == "set" ? subset_count(grp, ak, a) : multiset_count(grp, ak, a);
      if (g.json) {
        std::vector<u64> c = a.coordinates();
        std::cout << json{{"group", grp.invariant_factors()}, {"k", ak}, {"a", c}, {"mode", amode}, {"count", t.str()}}
                         .dump()
                  << '\n';
      } else {
        std::cout << t << '\n';
      }
      return 0;
    }

    if (*conics) {
      const u64 last = cto_opt->count() ? cto : cn;
      require(cn <= last, "conics: empty range");
      json rows = json::array();
      for (u64 n = cn; n <= last; ++n) {
        const Int zero_sum = subset_count(n, 6, 0);
        const u64 pairs = line_pair_count(n, g.budget);
        const Int irreducible = irreducible_conic_count(n, g.budget);
        if (g.json)
          rows.push_back(
              {{"n", n}, {"zero_sum_6", zero_sum.str()}, {"line_pairs", pairs}, {"irreducible", irreducible.str()}});
        else
          std::cout << n << ' ' << zero_sum << ' ' << pairs << ' ' << irreducible << '\n';
      }
      if (g.json) std::cout << rows.dump() << '\n';
      return 0;
    }

    if (*oeis) {
      require(fixture_opt->count() || (id_opt->count() && fetch), "oeis-check: give --fixture or --id with --fetch");
      std::optional<OeisPair> pair;
      if (id_opt->count()) pair = find_oeis_pair(seq_id);
      require(pair || (ok_opt->count() && os_opt->count()), "oeis-check: unknown sequence; give --k and --s");
      const u64 k = ok_opt->count() ? ok : pair->k;
      const i64 s = os_opt->count() ? os_ : pair->s;
      const i64 offset = ooffset_opt->count() ? ooffset : pair ? pair->offset : static_cast<i64>(k);

      std::vector<Term> fixture;
      if (fixture_opt->count()) {
        std::ifstream in(fixture_path);
        fixture = parse_bfile(in);
      } else {
        std::istringstream in(fetch_bfile(seq_id));
        fixture = parse_bfile(in);
      }
      const FixtureCheck res = check_fixture(fixture, k, s, offset, window);
      if (g.json) {
        json j{{"k", k}, {"s", s}, {"offset", offset}, {"agree", res.agree}, {"shift", res.shift},
               {"compared", res.compared}};
        if (res.first_mismatch)
          j["first_mismatch"] = {{"index", res.first_mismatch->index}, {"n", res.first_mismatch->n},
                                 {"fixture", res.first_mismatch->expected.str()},
                                 {"computed", res.first_mismatch->got.str()}};
        std::cout << j.dump() << '\n';
      } else if (res.agree) {
        std::cout << "agreement: " << res.compared << " terms, shift " << res.shift << '\n';
      } else if (res.first_mismatch) {
        const auto& m = *res.first_mismatch;
        std::cout << "mismatch at index " << m.index << " (n=" << m.n << "): fixture " << m.expected << ", computed "
                  << m.got << '\n';
      } else {
        std::cout << "no overlapping terms\n";
      }
      return res.agree ? 0 : kExitMismatch;
    }
  } catch (const CeilingExceeded& e) {
    std::cerr << "error: ceiling exceeded: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
