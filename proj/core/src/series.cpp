#include "pfsum/series.hpp"

#include <algorithm>
#include <vector>

namespace pfsum {

namespace {

class TermCache {
 public:
  explicit TermCache(const TermFn& fn) : fn_(fn) {}

  const BigComplex& operator[](std::int64_t k) {
    while (static_cast<std::int64_t>(terms_.size()) <= k) {
      terms_.push_back(fn_(static_cast<std::int64_t>(terms_.size())));
    }
    return terms_[static_cast<std::size_t>(k)];
  }

  std::int64_t size() const { return static_cast<std::int64_t>(terms_.size()); }

 private:
  const TermFn& fn_;
  std::vector<BigComplex> terms_;
};

constexpr int kDirectQuietRun = 3;
constexpr int kGrowthRun = 50;

SeriesResult sum_direct(const TermFn& term, const Precision& prec) {
  const BigReal eps(prec.tol / 10);
  SeriesResult r;
  int quiet = 0;
  int growing = 0;
  BigReal last_mag(-1);
  for (std::int64_t k = 0; k < prec.n_max; ++k) {
    const BigComplex t = term(k);
    const BigReal mag = abs(t);
    r.value += t;
    r.terms_used = k + 1;
    r.tail_estimate = mag;
    quiet = mag < eps ? quiet + 1 : 0;
    if (quiet >= kDirectQuietRun) {
      return r;
    }
    growing = (mag > last_mag && k > 0) ? growing + 1 : 0;
    last_mag = mag;
    if (growing >= kGrowthRun) {
      r.status = SeriesStatus::Diverging;
      return r;
    }
  }
  r.status = SeriesStatus::HitTermCap;
  return r;
}

SeriesResult sum_pairwise(const TermFn& term, const Precision& prec) {
  const BigReal eps(prec.tol / 10);
  SeriesResult r;
  int quiet = 0;
  int growing = 0;
  BigReal last_mag(-1);
  for (std::int64_t k = 0; k + 1 < prec.n_max; k += 2) {
    const BigComplex pair = term(k) + term(k + 1);
    const BigReal mag = abs(pair);
    r.value += pair;
    r.terms_used = k + 2;
    r.tail_estimate = mag;
    // Two quiet pairs in a row guard against an accidental cancellation.
    quiet = mag < eps ? quiet + 1 : 0;
    if (quiet >= 2) {
      return r;
    }
    growing = (mag > last_mag && k > 0) ? growing + 1 : 0;
    last_mag = mag;
    if (growing >= kGrowthRun) {
      r.status = SeriesStatus::Diverging;
      return r;
    }
  }
  r.status = SeriesStatus::HitTermCap;
  return r;
}

constexpr std::int64_t kFirstHead = 16;
constexpr std::int64_t kMaxEulerDepth = 40;

SeriesResult sum_euler(const TermFn& term, const Precision& prec) {
  const BigReal eps(prec.tol / 10);
  TermCache t(term);
  SeriesResult r;
  BigComplex head;
  std::int64_t head_len = 0;
  BigComplex previous;
  bool have_previous = false;
  for (std::int64_t n = kFirstHead;; n *= 2) {
    const std::int64_t depth = std::min(n / 2, kMaxEulerDepth);
    if (n + depth + 1 > prec.n_max) {
      r.status = SeriesStatus::HitTermCap;
      return r;
    }
    for (; head_len < n; ++head_len) {
      head += t[head_len];
    }
    // Amplitudes a_j = (-1)^j term(n+j); tail = sum_i (-1)^i D^i a_0 / 2^(i+1).
    std::vector<BigComplex> diff;
    diff.reserve(static_cast<std::size_t>(depth) + 1);
    for (std::int64_t j = 0; j <= depth; ++j) {
      diff.push_back((j % 2 == 0) ? t[n + j] : -t[n + j]);
    }
    BigComplex tail;
    BigReal scale = BigReal::ratio(1, 2);
    BigReal last_mag;
    for (std::int64_t i = 0; i <= depth; ++i) {
      const BigComplex contrib = diff[0] * scale;
      tail += (i % 2 == 0) ? contrib : -contrib;
      last_mag = abs(contrib);
      for (std::int64_t j = 0; j + 1 < static_cast<std::int64_t>(diff.size()) - i; ++j) {
        diff[static_cast<std::size_t>(j)] = diff[static_cast<std::size_t>(j) + 1] - diff[static_cast<std::size_t>(j)];
      }
      scale /= 2;
    }
    r.value = head + tail;
    r.terms_used = n + depth + 1;
    r.tail_estimate = last_mag;
    if (have_previous) {
      const BigReal change = abs(r.value - previous);
      r.tail_estimate = max(last_mag, change);
      if (last_mag < eps && change < eps) {
        return r;
      }
    }
    previous = r.value;
    have_previous = true;
  }
}

SeriesResult sum_richardson(const TermFn& term, const Precision& prec) {
  const BigReal eps(prec.tol / 10);
  SeriesResult r;
  std::vector<BigComplex> table;  // current Neville row
  std::vector<std::int64_t> sizes;
  BigComplex partial;
  std::int64_t k = 0;
  BigComplex last_diag;
  int quiet = 0;
  for (std::int64_t n = kFirstHead; n <= prec.n_max; n *= 2) {
    for (; k < n; ++k) {
      partial += term(k);
    }
    sizes.push_back(n);
    // Neville in h = 1/N, extrapolated to h = 0:
    // T_{i,j} = T_{i,j-1} + (T_{i,j-1} - T_{i-1,j-1}) / (N_i / N_{i-j} - 1).
    std::vector<BigComplex> row{partial};
    const std::size_t i = sizes.size() - 1;
    for (std::size_t j = 1; j <= i; ++j) {
      const BigReal ratio = BigReal(sizes[i]) / sizes[i - j];
      row.push_back(row[j - 1] + (row[j - 1] - table[j - 1]) / (ratio - 1));
    }
    table = std::move(row);
    const BigComplex& diag = table.back();
    r.value = diag;
    r.terms_used = n;
    if (i > 0) {
      r.tail_estimate = abs(diag - last_diag);
      quiet = r.tail_estimate < eps ? quiet + 1 : 0;
      // One quiet step suffices when it is far below the threshold.
      if (quiet >= 2 || (quiet == 1 && r.tail_estimate * 1000 < eps)) {
        return r;
      }
    }
    last_diag = diag;
  }
  r.status = SeriesStatus::HitTermCap;
  return r;
}

}  // namespace

SeriesResult sum_series(const TermFn& term, SummationStrategy strategy, const Precision& prec) {
  prec.validate();
  PrecisionScope scope(prec);
  switch (strategy) {
    case SummationStrategy::Direct:
      return sum_direct(term, prec);
    case SummationStrategy::PairwiseAlternating:
      return sum_pairwise(term, prec);
    case SummationStrategy::EulerTransform:
      return sum_euler(term, prec);
    case SummationStrategy::Richardson:
      return sum_richardson(term, prec);
  }
  return {};
}

std::string_view to_string(SeriesStatus s) {
  switch (s) {
    case SeriesStatus::Converged: return "Converged";
    case SeriesStatus::HitTermCap: return "HitTermCap";
    case SeriesStatus::Diverging: return "Diverging";
  }
  return "?";
}

std::string_view to_string(SummationStrategy s) {
  switch (s) {
    case SummationStrategy::Direct: return "Direct";
    case SummationStrategy::PairwiseAlternating: return "PairwiseAlternating";
    case SummationStrategy::EulerTransform: return "EulerTransform";
    case SummationStrategy::Richardson: return "Richardson";
  }
  return "?";
}

}  // namespace pfsum
