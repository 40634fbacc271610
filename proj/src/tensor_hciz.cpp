#include "tenwein/tensor_hciz.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <thread>

#include <json.hpp>

#include "tenwein/weingarten.hpp"

namespace tenwein {

namespace {

long ipow(long base, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

template <typename Scalar>
TensorMatrix<Scalar>::TensorMatrix(int N, int D, std::vector<Scalar> entries)
    : N_(N), D_(D), dim_(ipow(N, D)), entries_(std::move(entries)) {
  require(N >= 1 && D >= 1, "tensor dimensions must be positive");
  require(static_cast<long>(entries_.size()) == dim_ * dim_,
          "entry count must be (N^D)^2");
}

template <typename Scalar>
TensorMatrix<Scalar> TensorMatrix<Scalar>::identity(int N, int D) {
  long dim = ipow(N, D);
  std::vector<Scalar> e(static_cast<size_t>(dim * dim), Scalar(0));
  for (long i = 0; i < dim; ++i) e[static_cast<size_t>(i * dim + i)] = Scalar(1);
  return TensorMatrix(N, D, std::move(e));
}

template <typename Scalar>
bool TensorMatrix<Scalar>::is_identity() const {
  for (long r = 0; r < dim_; ++r)
    for (long c = 0; c < dim_; ++c)
      if (at(r, c) != Scalar(r == c ? 1 : 0)) return false;
  return true;
}

template class TensorMatrix<Rat>;
template class TensorMatrix<std::complex<double>>;

bool is_self_adjoint(const RatTensor& a) {
  for (long r = 0; r < a.dim(); ++r)
    for (long c = r; c < a.dim(); ++c)
      if (a.at(r, c) != a.at(c, r)) return false;
  return true;
}

bool is_self_adjoint(const CplxTensor& a, double tol) {
  double scale = 0.0;
  for (const auto& e : a.entries()) scale = std::max(scale, std::abs(e));
  if (scale == 0.0) return true;
  for (long r = 0; r < a.dim(); ++r)
    for (long c = r; c < a.dim(); ++c)
      if (std::abs(a.at(r, c) - std::conj(a.at(c, r))) > tol * scale) return false;
  return true;
}

namespace {

// Sequential slot contraction. Factors A[b_s, a_s] carry b^c_s = a^c_{inv_c(s)};
// factor s can be merged once all its indices are fixed, at step
// T(s) = max(s, max_c inv_c(s)). A variable (c,t) stays open while some
// unmerged factor still reads it.
template <typename Scalar>
Scalar trace_invariant_impl(const TensorMatrix<Scalar>& A, const PermTuple& sigma) {
  const int n = sigma.degree();
  const int D = sigma.colors();
  require(D == A.colors(), "color count mismatch between tensor and tuple");
  const int N = A.side();

  if (A.is_identity()) {
    // every color contributes one free index loop per cycle
    int cycles = 0;
    for (int c = 0; c < D; ++c) cycles += sigma.color(c).num_cycles();
    Scalar out(1);
    for (int i = 0; i < cycles; ++i) out = out * Scalar(N);
    return out;
  }

  std::vector<Permutation> inv;
  for (int c = 0; c < D; ++c) inv.push_back(sigma.color(c).inverse());

  // merge time of each factor
  std::vector<int> merge_at(static_cast<size_t>(n) + 1, 0);
  for (int s = 1; s <= n; ++s) {
    int t = s;
    for (int c = 0; c < D; ++c) t = std::max(t, inv[static_cast<size_t>(c)](s));
    merge_at[static_cast<size_t>(s)] = t;
  }
  // variable (c,t) is alive after step s while sigma_c(t) > s (a future factor
  // reads it as a b-index) or while factor t itself is unmerged
  auto alive_after = [&](int c, int t, int s) {
    return sigma.color(c)(t) > s || merge_at[static_cast<size_t>(t)] > s;
  };

  // state: values of the open variables in a fixed (c,t) order
  struct State {
    std::vector<int> open;  // encoded variable ids c*n + (t-1)
  };
  std::map<std::vector<int>, Scalar> table;
  table[{}] = Scalar(1);
  std::vector<int> open_vars;  // ids, parallel to state keys

  for (int s = 1; s <= n; ++s) {
    // add the D new variables of slot s
    std::map<std::vector<int>, Scalar> next;
    std::vector<int> new_open = open_vars;
    for (int c = 0; c < D; ++c) new_open.push_back(c * n + (s - 1));

    for (const auto& [key, value] : table) {
      std::vector<int> assign = key;
      assign.resize(new_open.size());
      // enumerate the N^D assignments of this slot's variables
      std::function<void(int)> enumerate = [&](int c) {
        if (c == D) {
          Scalar factor_prod = value;
          // merge the factors completed at this step
          for (int u = 1; u <= s; ++u) {
            if (merge_at[static_cast<size_t>(u)] != s) continue;
            long row = 0, col = 0;
            for (int cc = 0; cc < D; ++cc) {
              auto pos_of = [&](int var_id) {
                for (size_t i = 0; i < new_open.size(); ++i)
                  if (new_open[i] == var_id) return assign[i];
                throw InternalError("needed variable is not open");
              };
              int a_idx = pos_of(cc * n + (u - 1));
              int b_idx = pos_of(cc * n + (inv[static_cast<size_t>(cc)](u) - 1));
              col = col * N + a_idx;
              row = row * N + b_idx;
            }
            factor_prod = factor_prod * A.at(row, col);
            if (factor_prod == Scalar(0)) break;
          }
          if (factor_prod == Scalar(0)) return;
          // project onto the variables that stay alive
          std::vector<int> reduced_key;
          for (size_t i = 0; i < new_open.size(); ++i) {
            int id = new_open[static_cast<size_t>(i)];
            if (alive_after(id / n, id % n + 1, s)) reduced_key.push_back(assign[i]);
          }
          auto [it, inserted] = next.try_emplace(std::move(reduced_key), factor_prod);
          if (!inserted) it->second = it->second + factor_prod;
          return;
        }
        for (int v = 0; v < N; ++v) {
          assign[key.size() + static_cast<size_t>(c)] = v;
          enumerate(c + 1);
        }
      };
      enumerate(0);
    }
    table = std::move(next);
    open_vars.clear();
    for (int id : new_open)
      if (alive_after(id / n, id % n + 1, s)) open_vars.push_back(id);
  }

  check_invariant(table.size() <= 1, "all variables must close at the last slot");
  if (table.empty()) return Scalar(0);
  return table.begin()->second;
}

// all D-tuples of permutations of degree n
std::vector<PermTuple> all_tuples(int n, int D) {
  std::vector<PermTuple> out;
  const auto perms = all_permutations(n);
  std::vector<Permutation> acc(static_cast<size_t>(D), Permutation::identity(n));
  std::function<void(int)> rec = [&](int c) {
    if (c == D) {
      out.emplace_back(acc);
      return;
    }
    for (const auto& p : perms) {
      acc[static_cast<size_t>(c)] = p;
      rec(c + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

Rat trace_invariant(const RatTensor& a, const PermTuple& sigma) {
  return trace_invariant_impl(a, sigma);
}
std::complex<double> trace_invariant(const CplxTensor& a, const PermTuple& sigma) {
  return trace_invariant_impl(a, sigma);
}

namespace {

template <typename Scalar, typename Weight>
Scalar hciz_moment_impl(const TensorMatrix<Scalar>& a, const TensorMatrix<Scalar>& b, int n,
                        const Int& N, const std::function<Weight(const PermTuple&, const PermTuple&)>& weight,
                        const std::function<Scalar(const Weight&)>& to_scalar) {
  require(n >= 1, "n must be >= 1");
  require(N >= n, "requires N >= n");
  require(a.side() == b.side() && a.colors() == b.colors(), "tensor shapes must match");
  const int D = a.colors();
  require(Int(a.side()) == N, "tensor side must equal N");

  const auto tuples = all_tuples(n, D);
  std::vector<Scalar> tr_a, tr_b;
  tr_a.reserve(tuples.size());
  tr_b.reserve(tuples.size());
  for (const auto& t : tuples) {
    tr_a.push_back(trace_invariant(a, t));
    tr_b.push_back(trace_invariant(b, t.inverse()));
  }
  Scalar total(0);
  for (size_t i = 0; i < tuples.size(); ++i) {
    if (tr_a[i] == Scalar(0)) continue;
    for (size_t j = 0; j < tuples.size(); ++j) {
      if (tr_b[j] == Scalar(0)) continue;
      total = total + tr_a[i] * tr_b[j] * to_scalar(weight(tuples[i], tuples[j]));
    }
  }
  return total;
}

Rat weingarten_product(const PermTuple& sigma, const PermTuple& tau, const Int& N) {
  Rat w(1);
  for (int c = 0; c < sigma.colors(); ++c)
    w *= weingarten_exact(sigma.color(c) * tau.color(c).inverse(), N);
  return w;
}

}  // namespace

Rat hciz_moment(const RatTensor& a, const RatTensor& b, int n, const Int& N) {
  return hciz_moment_impl<Rat, Rat>(
      a, b, n, N,
      [&](const PermTuple& s, const PermTuple& t) { return weingarten_product(s, t, N); },
      [](const Rat& w) { return w; });
}

std::complex<double> hciz_moment(const CplxTensor& a, const CplxTensor& b, int n, const Int& N) {
  return hciz_moment_impl<std::complex<double>, Rat>(
      a, b, n, N,
      [&](const PermTuple& s, const PermTuple& t) { return weingarten_product(s, t, N); },
      [](const Rat& w) { return std::complex<double>(w.get_d(), 0.0); });
}

Rat hciz_cumulant(const RatTensor& a, const RatTensor& b, int n, const Int& N) {
  return hciz_moment_impl<Rat, Rat>(
      a, b, n, N,
      [&](const PermTuple& s, const PermTuple& t) { return wc_exact(s, t, N); },
      [](const Rat& w) { return w; });
}

std::complex<double> hciz_cumulant(const CplxTensor& a, const CplxTensor& b, int n, const Int& N) {
  return hciz_moment_impl<std::complex<double>, Rat>(
      a, b, n, N,
      [&](const PermTuple& s, const PermTuple& t) { return wc_exact(s, t, N); },
      [](const Rat& w) { return std::complex<double>(w.get_d(), 0.0); });
}

namespace {

using Eigen::MatrixXcd;

MatrixXcd to_eigen(const CplxTensor& a) {
  MatrixXcd m(a.dim(), a.dim());
  for (long r = 0; r < a.dim(); ++r)
    for (long c = 0; c < a.dim(); ++c) m(r, c) = a.at(r, c);
  return m;
}

MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
  MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Ginibre + QR with the diagonal phase fix; exactly Haar on U(N).
MatrixXcd haar_unitary(int N, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  MatrixXcd g(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) g(i, j) = std::complex<double>(normal(rng), normal(rng));
  Eigen::HouseholderQR<MatrixXcd> qr(g);
  MatrixXcd q = qr.householderQ();
  MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < N; ++j) {
    std::complex<double> d = r(j, j);
    double m = std::abs(d);
    std::complex<double> phase = (m == 0.0) ? 1.0 : d / m;
    q.col(j) *= phase;
  }
  return q;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t block) {
  // splitmix64 step over (seed, block)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (block + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

MonteCarloResult haar_sample_moment(const CplxTensor& a, const CplxTensor& b, int n, int N,
                                    long samples, std::uint64_t seed, int jobs) {
  require(n >= 1, "n must be >= 1");
  require(samples >= 2, "at least two samples required");
  require(a.side() == N && b.side() == N, "tensor side must equal N");
  require(a.colors() == b.colors(), "tensor shapes must match");
  const int D = a.colors();
  const MatrixXcd ae = to_eigen(a);
  const MatrixXcd be = to_eigen(b);

  constexpr long kBlock = 4096;
  const long blocks = (samples + kBlock - 1) / kBlock;

  struct BlockStat {
    std::complex<double> sum{0.0, 0.0};
    double sum_sq_re = 0.0, sum_sq_im = 0.0;
  };
  std::vector<BlockStat> stats(static_cast<size_t>(blocks));

  auto run_block = [&](long bi) {
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(bi)));
    const long lo = bi * kBlock;
    const long hi = std::min(samples, lo + kBlock);
    BlockStat st;
    for (long i = lo; i < hi; ++i) {
      MatrixXcd u = haar_unitary(N, rng);
      for (int c = 1; c < D; ++c) u = kron(u, haar_unitary(N, rng));
      std::complex<double> t = (ae * u * be * u.adjoint()).trace();
      std::complex<double> v = std::pow(t, n);
      st.sum += v;
      st.sum_sq_re += v.real() * v.real();
      st.sum_sq_im += v.imag() * v.imag();
    }
    stats[static_cast<size_t>(bi)] = st;
  };

  if (jobs <= 1 || blocks == 1) {
    for (long bi = 0; bi < blocks; ++bi) run_block(bi);
  } else {
    std::vector<std::thread> workers;
    std::atomic<long> next{0};
    const int nw = std::min<long>(jobs, blocks);
    for (int w = 0; w < nw; ++w)
      workers.emplace_back([&] {
        for (long bi = next.fetch_add(1); bi < blocks; bi = next.fetch_add(1)) run_block(bi);
      });
    for (auto& w : workers) w.join();
  }

  std::complex<double> sum{0.0, 0.0};
  double sq_re = 0.0, sq_im = 0.0;
  for (const auto& st : stats) {  // fixed reduction order
    sum += st.sum;
    sq_re += st.sum_sq_re;
    sq_im += st.sum_sq_im;
  }
  const double m = static_cast<double>(samples);
  std::complex<double> mean = sum / m;
  double var_re = std::max(0.0, sq_re / m - mean.real() * mean.real());
  double var_im = std::max(0.0, sq_im / m - mean.imag() * mean.imag());
  MonteCarloResult out;
  out.estimate = mean;
  out.standard_error = std::sqrt((var_re + var_im) / m);
  out.samples = samples;
  return out;
}

namespace {

Rat parse_rational_string(const std::string& s) {
  try {
    Rat q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("invalid rational '" + s + "'");
  }
}

}  // namespace

LoadedTensor parse_tensor(const std::string& json_text, double sa_tol) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("tensor file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("d") || !j.contains("entries"))
    throw ParseError("tensor file must contain n, d, entries");
  const int N = j["n"].get<int>();
  const int D = j["d"].get<int>();
  if (N < 1 || D < 1) throw ParseError("tensor n and d must be >= 1");
  const auto& entries = j["entries"];
  if (!entries.is_array()) throw ParseError("entries must be an array");
  long dim = ipow(N, D);
  if (static_cast<long>(entries.size()) != dim * dim)
    throw ParseError("entries must have (N^D)^2 elements");

  bool exact = true;
  for (const auto& e : entries) {
    if (e.is_string() || e.is_number_integer()) continue;
    exact = false;
    break;
  }

  LoadedTensor out;
  out.exact = exact;
  if (exact) {
    std::vector<Rat> vals;
    vals.reserve(entries.size());
    for (const auto& e : entries)
      vals.push_back(e.is_string() ? parse_rational_string(e.get<std::string>())
                                   : Rat(e.get<long>()));
    RatTensor t(N, D, std::move(vals));
    if (!is_self_adjoint(t)) throw DomainError("tensor is not self-adjoint");
    out.rat.push_back(std::move(t));
  } else {
    std::vector<std::complex<double>> vals;
    vals.reserve(entries.size());
    for (const auto& e : entries) {
      if (e.is_number())
        vals.emplace_back(e.get<double>(), 0.0);
      else if (e.is_string())
        vals.emplace_back(parse_rational_string(e.get<std::string>()).get_d(), 0.0);
      else if (e.is_array() && e.size() == 2)
        vals.emplace_back(e[0].get<double>(), e[1].get<double>());
      else
        throw ParseError("entries must be numbers, strings, or [re,im] pairs");
    }
    CplxTensor t(N, D, std::move(vals));
    if (!is_self_adjoint(t, sa_tol))
      throw DomainError("tensor is not self-adjoint within tolerance");
    out.cplx.push_back(std::move(t));
  }
  return out;
}

LoadedTensor load_tensor(const std::string& path, double sa_tol) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open tensor file '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_tensor(text, sa_tol);
}

CplxTensor to_complex(const RatTensor& a) {
  std::vector<std::complex<double>> vals;
  vals.reserve(a.entries().size());
  for (const auto& e : a.entries()) vals.emplace_back(e.get_d(), 0.0);
  return CplxTensor(a.side(), a.colors(), std::move(vals));
}

}  // namespace tenwein
