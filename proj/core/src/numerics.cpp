#include "spreadcx/numerics.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace spreadcx {

std::vector<double> simpson_weights(int n_intervals, double h) {
  if (n_intervals <= 0 || n_intervals % 2 != 0)
    throw DomainError("Simpson grid needs a positive even number of intervals, got " +
                      std::to_string(n_intervals));
  std::vector<double> w(static_cast<std::size_t>(n_intervals) + 1);
  for (int i = 0; i <= n_intervals; ++i) {
    const double c = (i == 0 || i == n_intervals) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    w[i] = c * h / 3.0;
  }
  return w;
}

MomentumGrid::MomentumGrid(int n_intervals)
    : n_intervals_(n_intervals), weights_(simpson_weights(n_intervals, kPi / n_intervals)) {
  nodes_.resize(weights_.size());
  for (int i = 0; i <= n_intervals; ++i) nodes_[i] = kPi * i / n_intervals;
}

double simpson_sum(std::span<const double> samples, const MomentumGrid& grid) {
  if (samples.size() != grid.size())
    throw DomainError("sample count does not match grid size");
  const auto& w = grid.weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) sum += w[i] * samples[i];
  return sum;
}

double elliptic_k(double m) {
  if (!(m >= 0.0) || m >= 1.0 - 1e-12)
    throw DomainError("elliptic_k: parameter m must lie in [0, 1 - 1e-12), got " + std::to_string(m));
  double a = 1.0, b = std::sqrt(1.0 - m);
  for (int it = 0; it < 64 && std::abs(a - b) > 4e-16 * a; ++it) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return kPi / (2.0 * a);
}

double elliptic_e(double m) {
  if (!(m >= 0.0) || m > 1.0)
    throw DomainError("elliptic_e: parameter m must lie in [0, 1], got " + std::to_string(m));
  if (m == 1.0) return 1.0;
  // E = K (1 - sum_n 2^(n-1) c_n^2), c_0^2 = m, c_{n+1} = (a_n - b_n)/2.
  double a = 1.0, b = std::sqrt(1.0 - m);
  double sum = 0.5 * m;
  double pow2 = 0.5;
  for (int it = 0; it < 64 && std::abs(a - b) > 4e-16 * a; ++it) {
    const double c = 0.5 * (a - b);
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
    pow2 *= 2.0;
    sum += pow2 * c * c;
  }
  return kPi / (2.0 * a) * (1.0 - sum);
}

std::vector<double> centered_derivative(std::span<const double> v, double step) {
  const std::size_t n = v.size();
  if (n < 3) throw DomainError("centered_derivative needs at least 3 samples");
  std::vector<double> d(n);
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (v[i + 1] - v[i - 1]) / (2.0 * step);
  d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * step);
  d[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * step);
  return d;
}

std::vector<double> second_difference(std::span<const double> v, double step) {
  const std::size_t n = v.size();
  if (n < 3) throw DomainError("second_difference needs at least 3 samples");
  std::vector<double> d(n);
  const double h2 = step * step;
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (v[i + 1] - 2.0 * v[i] + v[i - 1]) / h2;
  d[0] = d[1];
  d[n - 1] = d[n - 2];
  return d;
}

std::vector<double> AxisRange::values() const {
  if (!(step > 0.0)) throw DomainError("axis step must be > 0");
  if (!(to >= from)) throw DomainError("axis range must satisfy to >= from");
  const auto count = static_cast<std::size_t>(std::llround((to - from) / step)) + 1;
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = from + static_cast<double>(i) * step;
  return out;
}

SweepResult make_sweep(std::string axis_name, std::vector<double> axis, std::vector<double> value) {
  if (axis.size() != value.size()) throw DomainError("sweep axis and values differ in length");
  SweepResult s;
  s.axis_name = std::move(axis_name);
  s.axis = std::move(axis);
  s.value = std::move(value);
  s.derivative = centered_derivative(s.value, s.step());
  return s;
}

std::vector<Peak> find_peaks(const SweepResult& sweep, const PeakOptions& options) {
  std::vector<double> signal;
  switch (options.source) {
    case PeakSource::value: signal = sweep.value; break;
    case PeakSource::abs_derivative:
      signal = sweep.derivative;
      for (auto& x : signal) x = std::abs(x);
      break;
    case PeakSource::abs_curvature:
      signal = second_difference(sweep.value, sweep.step());
      for (auto& x : signal) x = std::abs(x);
      break;
  }
  const std::size_t n = signal.size();
  std::vector<Peak> peaks;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(signal[i] > signal[i - 1])) continue;
    std::size_t j = i;
    while (j + 1 < n && signal[j + 1] == signal[i]) ++j;
    if (j + 1 >= n || !(signal[j + 1] < signal[i])) {
      i = j;
      continue;
    }
    const double height = signal[i];
    double left_min = height;
    for (std::size_t l = i; l-- > 0;) {
      if (signal[l] > height) break;
      left_min = std::min(left_min, signal[l]);
    }
    double right_min = height;
    for (std::size_t r = j + 1; r < n; ++r) {
      if (signal[r] > height) break;
      right_min = std::min(right_min, signal[r]);
    }
    const std::size_t mid = (i + j) / 2;
    const double prominence = height - std::max(left_min, right_min);
    if (prominence >= options.min_prominence)
      peaks.push_back(Peak{mid, sweep.axis[mid], height, prominence});
    i = j;
  }
  if (options.min_separation > 0.0 && peaks.size() > 1) {
    std::vector<Peak> by_height = peaks;
    std::stable_sort(by_height.begin(), by_height.end(),
                     [](const Peak& a, const Peak& b) { return a.height > b.height; });
    std::vector<Peak> kept;
    for (const auto& p : by_height) {
      const bool clear = std::none_of(kept.begin(), kept.end(), [&](const Peak& q) {
        return std::abs(q.position - p.position) < options.min_separation;
      });
      if (clear) kept.push_back(p);
    }
    std::sort(kept.begin(), kept.end(),
              [](const Peak& a, const Peak& b) { return a.position < b.position; });
    peaks = std::move(kept);
  }
  return peaks;
}

std::vector<double> find_peaks(const SweepResult& sweep, double min_prominence, PeakSource source) {
  std::vector<double> out;
  for (const auto& p : find_peaks(sweep, PeakOptions{source, min_prominence, 0.0}))
    out.push_back(p.position);
  return out;
}

namespace {

std::atomic<unsigned> g_threads{0};

unsigned resolve_threads() {
  if (const char* env = std::getenv("SPREADCX_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

void set_thread_count(unsigned n) { g_threads.store(n); }

unsigned thread_count() {
  const unsigned n = g_threads.load();
  return n == 0 ? resolve_threads() : n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(thread_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n);
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace spreadcx
