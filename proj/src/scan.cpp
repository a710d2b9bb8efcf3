#include "qecc/scan.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qecc/threshold.hpp"

namespace qecc {
namespace {

constexpr int kMaxScanN = 100;

std::string real_str(const Real& v) {
  std::ostringstream os;
  os.precision(35);
  os << v;
  return os.str();
}

BoundVerdict thm1_condition_verdict(const QuantumParams& p) {
  BoundVerdict v;
  v.bound = "thm1_threshold_condition";
  const ThresholdReport r = thm1_applies(p.n, p.K, p.d, p.q);
  if (r.status == Thm1Status::kNotApplicable) {
    v.applicable = false;
    v.note = "requires q >= 3";
    return v;
  }
  v.applicable = true;
  v.satisfied = r.status == Thm1Status::kApplies;
  v.equality = false;
  v.lhs = real_str(r.one_minus_delta * p.n - r.margin);  // log_q K + d
  v.rhs = real_str(r.one_minus_delta * p.n);             // (1 - delta) n
  switch (r.status) {
    case Thm1Status::kIndeterminate:
      v.note = "indeterminate: margin within the precision guard band";
      break;
    case Thm1Status::kSingletonInconsistent:
      v.note = "parameters already violate the quantum Singleton bound; condition not certifying";
      break;
    default:
      v.note = "evaluated at 168-bit precision; when satisfied, the code obeys the Hamming bound";
  }
  return v;
}

}  // namespace

std::string to_string(Category c) {
  switch (c) {
    case Category::kSatisfiesHamming: return "SATISFIES_HAMMING";
    case Category::kImpossibleThm1: return "IMPOSSIBLE_THM1";
    case Category::kImpossibleCssQ5: return "IMPOSSIBLE_CSS_Q5";
    case Category::kImpossibleCssStructural: return "IMPOSSIBLE_CSS_STRUCTURAL";
    case Category::kImpossibleMdsNondegenerate: return "IMPOSSIBLE_MDS_NONDEGENERATE";
    case Category::kOpenDegenerateCandidate: return "OPEN_DEGENERATE_CANDIDATE";
  }
  return "?";
}

Category category_from_string(const std::string& s) {
  for (Category c : {Category::kSatisfiesHamming, Category::kImpossibleThm1, Category::kImpossibleCssQ5,
                     Category::kImpossibleCssStructural, Category::kImpossibleMdsNondegenerate,
                     Category::kOpenDegenerateCandidate})
    if (to_string(c) == s) return c;
  throw std::invalid_argument("unknown category: " + s);
}

bool is_impossible(Category c) {
  return c == Category::kImpossibleThm1 || c == Category::kImpossibleCssQ5 ||
         c == Category::kImpossibleCssStructural || c == Category::kImpossibleMdsNondegenerate;
}

Classification classify(const QuantumParams& p) {
  Classification out{p, Category::kOpenDegenerateCandidate, {}};

  const BoundVerdict qhb = qhb_check(p);
  out.reasons.push_back(qhb);
  if (qhb.satisfied) {
    out.category = Category::kSatisfiesHamming;
    return out;
  }

  const BoundVerdict singleton = quantum_singleton_check(p);
  out.reasons.push_back(singleton);
  if (singleton.equality) {
    out.category = Category::kImpossibleMdsNondegenerate;
    return out;
  }

  const BoundVerdict thm1 = thm1_condition_verdict(p);
  out.reasons.push_back(thm1);
  if (thm1.applicable && thm1.satisfied) {
    out.category = Category::kImpossibleThm1;
    return out;
  }

  if (p.css && p.q >= 5 && is_prime_power(p.q)) {
    BoundVerdict v;
    v.bound = "css_alphabet_ge_5";
    v.applicable = true;
    v.satisfied = true;
    v.lhs = "5";
    v.rhs = std::to_string(p.q);
    v.note = "CSS codes over prime-power alphabets q >= 5 obey the quantum Hamming bound";
    out.reasons.push_back(v);
    out.category = Category::kImpossibleCssQ5;
    return out;
  }

  if (p.css && p.k && is_prime_power(p.q)) {
    const CssFeasibility f = css_feasibility(p.n, *p.k, p.d, p.q);
    out.reasons.insert(out.reasons.end(), f.verdicts.begin(), f.verdicts.end());
    out.reasons.insert(out.reasons.end(), f.per_k1.begin(), f.per_k1.end());
    if (!f.css_possible) {
      out.category = Category::kImpossibleCssStructural;
      return out;
    }
  }

  out.category = Category::kOpenDegenerateCandidate;
  return out;
}

ScanReport scan_range(int n_max, std::vector<int> qs, bool css, const OpenCallback& on_open) {
  if (n_max < 1 || n_max > kMaxScanN)
    throw std::invalid_argument("scan_range: n_max outside [1, " + std::to_string(kMaxScanN) + "]");
  if (qs.empty()) throw std::invalid_argument("scan_range: empty alphabet list");
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  for (int q : qs) {
    if (q < 2) throw std::invalid_argument("scan_range: q must be >= 2");
    if (css && !is_prime_power(q))
      throw std::invalid_argument("scan_range: CSS codes need a prime-power alphabet, got q=" + std::to_string(q));
  }

  ScanReport rep;
  rep.n_max = n_max;
  rep.qs = qs;
  rep.css = css;
  for (Category c : {Category::kSatisfiesHamming, Category::kImpossibleThm1, Category::kImpossibleCssQ5,
                     Category::kImpossibleCssStructural, Category::kImpossibleMdsNondegenerate,
                     Category::kOpenDegenerateCandidate})
    rep.counts[to_string(c)] = 0;

  for (int n = 2; n <= n_max; ++n) {
    // flatten (k, d, q) for this n; classify in parallel, merge in order
    struct Cell {
      int k, d, q;
    };
    std::vector<Cell> cells;
    for (int k = 1; k < n; ++k)
      for (int d = 2; d <= n; ++d)
        for (int q : qs) cells.push_back({k, d, q});
    std::vector<Category> cats(cells.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(cells.size()); ++i) {
      const auto& c = cells[i];
      cats[i] = classify(QuantumParams::from_k(n, c.k, c.d, c.q, css)).category;
    }
    for (size_t i = 0; i < cells.size(); ++i) {
      ++rep.counts[to_string(cats[i])];
      ++rep.total;
      if (cats[i] == Category::kOpenDegenerateCandidate) {
        const OpenEntry e{n, cells[i].k, cells[i].d, cells[i].q, css};
        rep.open.push_back(e);
        if (on_open) on_open(e);
      }
    }
  }
  return rep;
}

BigInt gaussian_binomial(int n, int k, int q) {
  if (k < 0 || k > n) return 0;
  // prod_{i=0}^{k-1} (q^{n-i} - 1) / (q^{k-i} - 1), computed as an exact
  // fraction product
  BigInt num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= ipow(q, n - i) - 1;
    den *= ipow(q, k - i) - 1;
  }
  return num / den;
}

void for_each_rref_subspace(const FieldPtr& field, int n, int k,
                            const std::function<void(const CodeMatrix&)>& fn) {
  if (k < 1 || k > n) throw std::invalid_argument("for_each_rref_subspace: k outside [1, n]");
  const int q = field->q();

  std::vector<int> piv(k);
  for (int i = 0; i < k; ++i) piv[i] = i;

  for (;;) {
    // free cells of this pivot pattern: (i, c) with c > piv[i], c not a pivot
    std::vector<bool> is_piv(n, false);
    for (int p : piv) is_piv[p] = true;
    std::vector<std::pair<int, int>> free_cells;
    for (int i = 0; i < k; ++i)
      for (int c = piv[i] + 1; c < n; ++c)
        if (!is_piv[c]) free_cells.emplace_back(i, c);

    CodeMatrix m(field, k, n);
    for (int i = 0; i < k; ++i) m.set(i, piv[i], 1);
    std::vector<int> digits(free_cells.size(), 0);
    for (;;) {
      fn(m);
      size_t j = 0;
      while (j < digits.size() && digits[j] == q - 1) {
        digits[j] = 0;
        m.set(free_cells[j].first, free_cells[j].second, 0);
        ++j;
      }
      if (j == digits.size()) break;
      ++digits[j];
      m.set(free_cells[j].first, free_cells[j].second, digits[j]);
    }

    // next pivot combination in lexicographic order
    int i = k - 1;
    while (i >= 0 && piv[i] == n - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
}

std::vector<OracleFailure> oracle_assertions(const CssPair& pair, const QuantumParams& params,
                                             std::uint64_t budget) {
  std::vector<OracleFailure> fails;
  const int n = params.n, k = *params.k, d = params.d, q = params.q;
  auto add = [&](const std::string& check, const std::string& detail) {
    fails.push_back({pair.n, pair.k1, pair.k2, check, detail});
  };

  const BoundVerdict hb = qhb_check(params);
  if (!hb.satisfied)
    add("quantum_hamming", "violated: " + hb.lhs + " > " + hb.rhs + " for [[" + std::to_string(n) + "," +
                               std::to_string(k) + "," + std::to_string(d) + "]]_" + std::to_string(q));

  const BoundVerdict g = quantum_griesmer_css(n, k, d, q);
  if (!g.satisfied)
    add("quantum_griesmer", "violated: " + g.lhs + " > " + g.rhs + " for [[" + std::to_string(n) + "," +
                                std::to_string(k) + "," + std::to_string(d) + "]]_" + std::to_string(q));

  if (q == 2) {
    const int tmax = rains_css_max_t(n, k);
    if (params.t() > tmax)
      add("rains_error_limit",
          "t=" + std::to_string(params.t()) + " exceeds floor((n-k+1)/6)=" + std::to_string(tmax));
  }

  const DerivedCodes derived = lemma1_derive(pair);
  const DerivedReport rep = verify_derived(pair, derived, budget);
  if (!(rep.d_dim == k && rep.dprime_dim == k && rep.d_min_weight >= d && rep.dprime_min_weight >= d))
    add("lemma1_derivation", "derived [" + std::to_string(rep.d_length) + "," + std::to_string(rep.d_dim) +
                                 "," + std::to_string(rep.d_min_weight) + "] and [" +
                                 std::to_string(rep.dprime_length) + "," + std::to_string(rep.dprime_dim) + "," +
                                 std::to_string(rep.dprime_min_weight) + "] do not certify k=" +
                                 std::to_string(k) + ", d>=" + std::to_string(d));

  const Classification cls = classify(params);
  if (is_impossible(cls.category))
    add("classify_consistency", "realized parameters classified " + to_string(cls.category));

  return fails;
}

namespace {

// Standard [7,4] Hamming generator; its dual sits inside it, which makes
// the pair the pinned regression case for the derivation.
CssPair steane_pair(std::uint64_t budget) {
  FieldPtr f2 = Field::make(2, 1);
  const CodeMatrix g = CodeMatrix::from_rows(f2, {{1, 0, 0, 0, 0, 1, 1},
                                                  {0, 1, 0, 0, 1, 0, 1},
                                                  {0, 0, 1, 0, 1, 1, 0},
                                                  {0, 0, 0, 1, 1, 1, 1}});
  LinearCode hamming = LinearCode::from_generator(g);
  return CssPair::make(dual(hamming), hamming, budget);
}

}  // namespace

OracleReport oracle_exhaustive_css(const OracleOptions& opt) {
  if (opt.q != 2 && opt.q != 3) throw std::invalid_argument("oracle: q must be 2 or 3");
  if (opt.n_max < 2 || opt.n_max > 12) throw std::invalid_argument("oracle: n_max outside [2, 12]");

  OracleReport rep;
  rep.q = opt.q;
  rep.n_max = opt.n_max;
  rep.budget = opt.budget;
  rep.seed = opt.seed;
  rep.samples_per_n = opt.samples_per_n;
  rep.exhaustive_n_limit = opt.q == 2 ? 6 : 4;

  FieldPtr field = Field::make(opt.q, 1);
  std::uint64_t planned = 0;

  // ---- exhaustive phase ----
  for (int n = 2; n <= std::min(opt.n_max, rep.exhaustive_n_limit); ++n) {
    // outer codes, materialized so the sweep can be split across threads
    std::vector<CodeMatrix> outers;
    std::vector<std::uint64_t> block_pairs;  // subcode count per outer, same for equal dims
    for (int k2 = 1; k2 <= n; ++k2) {
      BigInt subcodes = 0;
      for (int k1 = 0; k1 < k2; ++k1) subcodes += gaussian_binomial(k2, k1, opt.q);
      const auto per_block = subcodes.convert_to<std::uint64_t>();
      for_each_rref_subspace(field, n, k2, [&](const CodeMatrix& m) {
        outers.push_back(m);
        block_pairs.push_back(per_block);
      });
    }
    // deterministic budget prefix: take whole blocks while they fit
    size_t nblocks = 0;
    for (; nblocks < outers.size(); ++nblocks) {
      if (planned + block_pairs[nblocks] > opt.budget) {
        rep.complete = false;
        break;
      }
      planned += block_pairs[nblocks];
    }

    std::vector<std::vector<OracleFailure>> fails(nblocks);
    std::uint64_t n_pairs = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : n_pairs)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
      const LinearCode c2 = LinearCode::from_generator(outers[b]);
      const int k2 = c2.dim();
      const Field& f = *field;
      auto handle_pair = [&](const LinearCode& c1) {
        const CssPair pair = CssPair::make(c1, c2, opt.budget);
        auto fl = oracle_assertions(pair, css_params(pair), opt.budget);
        fails[b].insert(fails[b].end(), fl.begin(), fl.end());
        ++n_pairs;
      };
      handle_pair(LinearCode::zero(field, n));  // k1 = 0 subcode
      for (int k1 = 1; k1 < k2; ++k1) {
        // subcodes of c2 = subspaces of its message space, mapped through
        // the generator
        for_each_rref_subspace(field, k2, k1, [&](const CodeMatrix& msgs) {
          CodeMatrix rows(field, k1, n);
          for (int i = 0; i < k1; ++i)
            for (int c = 0; c < n; ++c) {
              int acc = 0;
              for (int j = 0; j < k2; ++j) acc = f.add(acc, f.mul(msgs.at(i, j), c2.generator().at(j, c)));
              rows.set(i, c, acc);
            }
          handle_pair(LinearCode::from_generator(rows));
        });
      }
    }
    for (auto& fl : fails) rep.failures.insert(rep.failures.end(), fl.begin(), fl.end());
    rep.pairs_per_n[n] += n_pairs;
    rep.pairs_checked += n_pairs;
    if (!rep.complete) break;
  }

  // ---- sampled phase ----
  if (rep.complete) {
    for (int n = rep.exhaustive_n_limit + 1; n <= opt.n_max; ++n) {
      std::uint64_t wanted = opt.samples_per_n;
      if (opt.q == 2 && n == 7) ++wanted;  // room for the pinned case
      if (planned + wanted > opt.budget) {
        wanted = opt.budget > planned ? opt.budget - planned : 0;
        rep.complete = false;
      }
      planned += wanted;

      std::vector<CssPair> pairs;
      pairs.reserve(wanted);
      if (opt.q == 2 && n == 7 && wanted > 0) pairs.push_back(steane_pair(opt.budget));
      for (std::uint64_t trial = 0; pairs.size() < wanted; ++trial) {
        std::mt19937_64 rng(splitmix64(opt.seed ^ (static_cast<std::uint64_t>(n) << 32) ^ trial));
        pairs.push_back(random_nested_pair(field, n, rng, opt.budget));
      }
      std::vector<std::vector<OracleFailure>> fails(pairs.size());
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(pairs.size()); ++i)
        fails[i] = oracle_assertions(pairs[i], css_params(pairs[i]), opt.budget);
      for (auto& fl : fails) rep.failures.insert(rep.failures.end(), fl.begin(), fl.end());
      rep.pairs_per_n[n] += pairs.size();
      rep.pairs_checked += pairs.size();
      if (!rep.complete) break;
    }
  }

  std::sort(rep.failures.begin(), rep.failures.end());
  return rep;
}

}  // namespace qecc
