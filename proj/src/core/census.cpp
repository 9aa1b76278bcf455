#include "core/census.hpp"

#include <cmath>
#include <future>
#include <numeric>

namespace semitoric {

namespace {

// Depth-first over all words of length d with a_0 in [a0_lo, a0_hi] and the
// remaining entries in [-bound, bound]; prefix matrices live on a stack so a
// leaf costs one matrix product.  Visits words in lexicographic order.
template <typename Leaf>
void scan_words(int d, i64 bound, i64 a0_lo, i64 a0_hi, Leaf&& leaf) {
  std::vector<Mat2> prefix(static_cast<size_t>(d) + 1);
  FanWord word(d);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == d) {
      leaf(word, prefix[depth]);
      return;
    }
    const i64 lo = depth == 0 ? a0_lo : -bound;
    const i64 hi = depth == 0 ? a0_hi : bound;
    for (i64 a = lo; a <= hi; ++a) {
      word[depth] = a;
      prefix[depth + 1] = prefix[depth] * kS * t_power(a);
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
}

void check_search_size(int max_length, i64 coeff_bound) {
  double total = 0.0;
  const double base = static_cast<double>(2 * coeff_bound + 1);
  for (int d = 1; d <= max_length; ++d) total += std::pow(base, d);
  if (total > 1e8)
    throw FanError("enumeration space exceeds 10^8 words");
}

i64 word_sum(const FanWord& w) {
  return std::accumulate(w.begin(), w.end(), i64{0});
}

// Runs fn over a_0 chunks and concatenates the results in a_0 order, so the
// output is independent of the thread count.
template <typename Fn>
auto partitioned(i64 bound, unsigned threads, Fn&& fn) {
  using Out = decltype(fn(i64{0}, i64{0}));
  if (threads <= 1) return fn(-bound, bound);
  std::vector<std::future<Out>> futs;
  const i64 span = 2 * bound + 1;
  const i64 per = std::max<i64>(1, span / threads);
  for (i64 lo = -bound; lo <= bound; lo += per) {
    i64 hi = std::min(bound, lo + per - 1);
    futs.push_back(std::async(std::launch::async, fn, lo, hi));
  }
  Out all;
  for (auto& f : futs) {
    Out part = f.get();
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

}  // namespace

std::vector<FanWord> enumerate_solutions(const EnumerationSpec& spec) {
  check_search_size(spec.max_length, spec.coeff_bound);
  std::vector<FanWord> out;
  for (int d = 1; d <= spec.max_length; ++d) {
    auto chunk = [&, d](i64 lo, i64 hi) {
      std::vector<FanWord> part;
      scan_words(d, spec.coeff_bound, lo, hi,
                 [&](const FanWord& w, const Mat2& m) {
                   if (!(m == kIdentity)) return;
                   if (3 * d - word_sum(w) != spec.weight) return;
                   part.push_back(w);
                 });
      return part;
    };
    auto found = partitioned(spec.coeff_bound, spec.threads, chunk);
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

bool geometric_equiv_check(const FanWord& a) {
  const int d = static_cast<int>(a.size());
  if (d < 3) return false;
  ToricFan f = word_to_fan(a);
  for (const Vec2& v : f.rays)
    if (!is_primitive(v)) return false;
  for (int i = 0; i < d; ++i)
    if (det2(f.rays[i], f.rays[(i + 1) % d]) != 1) return false;
  // Closure of the recurrence across the wrap-around.
  if (!(-f.rays[d - 2] + a[d - 2] * f.rays[d - 1] == f.rays[0])) return false;
  if (!(-f.rays[d - 1] + a[d - 1] * f.rays[0] == f.rays[1])) return false;
  return geometric_winding(f.rays) == 1;
}

i64 float_winding_crosscheck(const FanWord& a) {
  return float_winding(word_to_fan(a).rays);
}

std::vector<CensusRow> census(int max_length, i64 coeff_bound,
                              unsigned threads) {
  check_search_size(max_length, coeff_bound);
  std::vector<CensusRow> rows;
  for (int d = 1; d <= max_length; ++d) {
    auto chunk = [&, d](i64 lo, i64 hi) {
      std::vector<CensusRow> part;
      scan_words(d, coeff_bound, lo, hi, [&](const FanWord& w, const Mat2& m) {
        if (!(m == kIdentity)) return;
        i64 weight = 3 * d - word_sum(w);
        if (weight % 12 != 0) return;
        CensusRow row;
        row.word = w;
        row.weight = weight;
        row.winding = weight / 12;
        row.is_fan = weight == 12;
        row.model = "-";
        if (row.is_fan) {
          ToricFan f = word_to_fan(w);
          if (validate_toric(f).valid)
            row.model = to_string(fulton_reduce(f).model);
          else
            row.is_fan = false;
        }
        part.push_back(std::move(row));
      });
      return part;
    };
    auto found = partitioned(coeff_bound, threads, chunk);
    rows.insert(rows.end(), found.begin(), found.end());
  }
  return rows;
}

}  // namespace semitoric
