#pragma once

// Sweeps of the structural identities, reported in a machine-readable form.
// Every check compares two independent routes to the same number.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "abelian.hpp"
#include "counting.hpp"
#include "discovery.hpp"
#include "divmatrix.hpp"
#include "parallel.hpp"
#include "series.hpp"

namespace modpart {

struct Failure {
  std::string id;
  std::string expected;
  std::string got;
};

struct Report {
  std::string suite;
  std::size_t cases = 0;
  std::vector<Failure> failures;

  bool passed() const { return failures.empty(); }

  void expect(const std::string& id, const std::string& expected, const std::string& got) {
    ++cases;
    if (expected != got) failures.push_back({id, expected, got});
  }
  void expect(const std::string& id, bool ok) { expect(id, "true", ok ? "true" : "false"); }

  void merge(Report other) {
    cases += other.cases;
    for (auto& f : other.failures) failures.push_back(std::move(f));
  }
};

inline nlohmann::json to_json(const Report& r) {
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : r.failures) fails.push_back({{"id", f.id}, {"expected", f.expected}, {"got", f.got}});
  return {{"suite", r.suite}, {"cases", r.cases}, {"passed", r.passed()}, {"failures", fails}};
}

struct VerifyDepths {
  u64 kmax = 200;         // matrices
  u64 kron_max = 2000;    // k1 * k2 bound for Kronecker commutativity
  u64 entry_kmax = 200;   // entry identities and Ramanujan sums
  u64 nmax = 22;          // brute-force oracle sweep
  u64 identity_nmax = 60; // closed-form identity sweeps
  u64 series_kmax = 12;
  u64 discover_kmax = 24;
  u64 group_order_max = 16;
  u64 multiset_order_max = 12;
  u64 multiset_kmax = 6;
  u64 cyclic_nmax = 20;   // abelian counts on Z/n against subset_count
  u64 budget = kDefaultBudget;
  unsigned threads = 1;

  static VerifyDepths quick() {
    VerifyDepths d;
    d.kmax = 60;
    d.kron_max = 300;
    d.entry_kmax = 60;
    d.nmax = 14;
    d.identity_nmax = 30;
    d.series_kmax = 8;
    d.discover_kmax = 12;
    d.group_order_max = 10;
    d.multiset_order_max = 8;
    d.multiset_kmax = 4;
    d.cyclic_nmax = 12;
    return d;
  }
};

namespace detail {

inline std::string key(std::initializer_list<u64> xs) {
  std::string s;
  for (u64 x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

template <typename Fn>
Report sweep(const std::string& suite, u64 first, u64 last, unsigned threads, Fn per_index) {
  Report total{suite, 0, {}};
  if (last < first) return total;
  auto parts = parallel_map(static_cast<std::size_t>(last - first + 1), threads,
                            [&](std::size_t i) { return per_index(first + i); });
  for (auto& p : parts) total.merge(std::move(p));
  return total;
}

} // namespace detail

inline Report verify_matrices(const VerifyDepths& depth) {
  Report rep = detail::sweep("matrices", 1, depth.kmax, depth.threads, [&](u64 k) {
    Report r;
    for (const auto& c : verify_properties(k).checks)
      r.expect("property" + std::to_string(c.id) + "(k=" + std::to_string(k) + ")", c.passed);
    return r;
  });
  rep.merge(detail::sweep("matrices", 1, depth.kron_max, depth.threads, [&](u64 k) {
    Report r;
    const DivisorMatrix whole = build_matrix(k);
    for (u64 k1 : divisors(k)) {
      const u64 k2 = k / k1;
      if (k1 > k2 || std::gcd(k1, k2) != 1) continue;
      const DivisorMatrix a = build_matrix(k1), b = build_matrix(k2);
      r.expect("kronecker(" + detail::key({k1, k2}) + ")", kronecker(a, b) == whole && kronecker(b, a) == whole);
    }
    return r;
  }));
  rep.merge(detail::sweep("matrices", 1, depth.entry_kmax, depth.threads, [&](u64 k) {
    Report r;
    const DivisorMatrix m = build_matrix(k);
    const bool sqf = factorize(k).squarefree();
    for (u64 t : m.divisors())
      for (u64 d : m.divisors()) {
        const std::string id = "entry(" + detail::key({k, t, d}) + ")";
        const i64 closed = entry(k, t, d);
        r.expect(id + " matrix", m.at(t, d).str(), std::to_string(closed));
        r.expect(id + " local factors", std::to_string(closed), std::to_string(entry_by_local_factors(k, t, d)));
        r.expect(id + " ramanujan", std::to_string(closed), std::to_string(ramanujan_sum(d, static_cast<i64>(t))));
        r.expect(id + " roots of unity", std::to_string(closed),
                 std::to_string(ramanujan_sum_numeric(d, static_cast<i64>(t))));
        if (sqf) r.expect(id + " square-free", std::to_string(closed), std::to_string(squarefree_entry(k, t, d)));
      }
    return r;
  }));
  rep.suite = "matrices";
  return rep;
}

inline Report verify_counts(const VerifyDepths& depth) {
  Report rep = detail::sweep("counts", 1, depth.nmax, depth.threads, [&](u64 n) {
    Report r;
    for (u64 k = 1; k <= n; ++k) {
      const auto hist = brute_force_histogram(n, k, depth.budget);
      for (u64 s = 0; s < n; ++s)
        r.expect("oracle(" + detail::key({n, k, s}) + ")", std::to_string(hist[s]),
                 subset_count(n, k, static_cast<i64>(s)).str());
    }
    return r;
  });
  rep.merge(detail::sweep("counts", 1, depth.identity_nmax, depth.threads, [&](u64 n) {
    Report r;
    for (u64 k = 1; k <= n; ++k) {
      r.expect("zero-sum(" + detail::key({n, k}) + ")", subset_count(n, k, 0).str(), zero_sum_count(n, k).str());
      Int total = 0;
      for (u64 s = 0; s < n; ++s) {
        const Int t = subset_count(n, k, static_cast<i64>(s));
        total += t;
        if (k < n) {
          const CountQuery c = complement_query({n, k, static_cast<i64>(s)});
          r.expect("complement(" + detail::key({n, k, s}) + ")", t.str(), subset_count(c).str());
        }
      }
      r.expect("total(" + detail::key({n, k}) + ")", binomial(n, static_cast<i64>(k)).str(), total.str());
      for (u64 s : divisors(k))
        r.expect("hadjicostas(" + detail::key({n, k, s}) + ")", subset_count(n, k, static_cast<i64>(s)).str(),
                 hadjicostas_sum(n, k, s).str());
      if (k < n) {
        r.expect("necklace(" + detail::key({n, k}) + ")", necklace_identity_holds(n, k));
        r.expect("lyndon(" + detail::key({n, k}) + ")", lyndon_identity_holds(n, k));
      }
    }
    return r;
  }));
  rep.suite = "counts";
  return rep;
}

inline Report verify_series(const VerifyDepths& depth) {
  Report rep = detail::sweep("series", 1, depth.series_kmax, depth.threads, [&](u64 k) {
    Report r;
    const std::size_t order = 4 * k;
    const auto g = generating_series(k, order);
    const auto ds = divisors(k);
    for (std::size_t i = 0; i < ds.size(); ++i) {
      r.expect("integral(" + detail::key({k, ds[i]}) + ")", g[i].integral());
      for (u64 n = 0; n < order; ++n) {
        const Rational expected = n < k ? Rational(0) : Rational(subset_count(n, k, static_cast<i64>(ds[i])));
        r.expect("coefficient(" + detail::key({k, ds[i], n}) + ")", to_string(expected),
                 to_string(g[i].coefficient(n)));
      }
    }
    return r;
  });
  rep.merge(detail::sweep("series", 1, depth.discover_kmax, depth.threads, [&](u64 k) {
    Report r;
    const auto found = discover_matrix(k, depth.discover_kmax);
    r.expect("discover(" + std::to_string(k) + ") unique", found.unique);
    r.expect("discover(" + std::to_string(k) + ") equals M(k)", found.matrix == build_matrix(k));
    return r;
  }));
  rep.suite = "series";
  return rep;
}

inline Report verify_abelian(const VerifyDepths& depth) {
  Report rep = detail::sweep("abelian", 1, depth.group_order_max, depth.threads, [&](u64 order) {
    Report r;
    for (const auto& g : groups_of_order(order)) {
      const auto table = brute_force_subset_table(g, depth.budget);
      for (u64 k = 0; k <= order; ++k) {
        std::map<u64, std::string> by_level;
        for (u64 ai = 0; ai < order; ++ai) {
          const GroupElement a = GroupElement::from_index(g, ai);
          const Int t = subset_count(g, k, a);
          const std::string id = "subsets(" + g.str() + ";k=" + std::to_string(k) + ";a=" + std::to_string(ai) + ")";
          r.expect(id, std::to_string(table[k][ai]), t.str());
          const u64 level = divisibility_level(g, a);
          auto [it, inserted] = by_level.emplace(level, t.str());
          if (!inserted) r.expect(id + " class function", it->second, t.str());
        }
      }
      if (order <= depth.multiset_order_max) {
        const auto mt = brute_force_multiset_table(g, depth.multiset_kmax, depth.budget);
        for (u64 k = 0; k <= depth.multiset_kmax; ++k)
          for (u64 ai = 0; ai < order; ++ai)
            r.expect("multisets(" + g.str() + ";k=" + std::to_string(k) + ";a=" + std::to_string(ai) + ")",
                     std::to_string(mt[k][ai]), multiset_count(g, k, GroupElement::from_index(g, ai)).str());
      }
    }
    return r;
  });
  rep.merge(detail::sweep("abelian", 1, depth.cyclic_nmax, depth.threads, [&](u64 n) {
    Report r;
    const AbelianGroup g = AbelianGroup::canonical({n});
    for (u64 k = 0; k <= n; ++k)
      for (u64 s = 0; s < n; ++s) {
        const GroupElement a(g, g.rank() ? std::vector<i64>{static_cast<i64>(s)} : std::vector<i64>{});
        r.expect("cyclic(" + detail::key({n, k, s}) + ")", subset_count(n, k, static_cast<i64>(s)).str(),
                 subset_count(g, k, a).str());
      }
    return r;
  }));
  rep.suite = "abelian";
  return rep;
}

inline Report verify_suite(const std::string& name, const VerifyDepths& depth) {
  if (name == "matrices") return verify_matrices(depth);
  if (name == "counts") return verify_counts(depth);
  if (name == "series") return verify_series(depth);
  if (name == "abelian") return verify_abelian(depth);
  if (name == "all") {
    Report all{"all", 0, {}};
    for (const char* s : {"matrices", "counts", "series", "abelian"}) all.merge(verify_suite(s, depth));
    return all;
  }
  throw std::invalid_argument("unknown verify suite '" + name + "'");
}

} // namespace modpart
