#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "tenwein/cumulant_weingarten.hpp"
#include "tenwein/numeric.hpp"

namespace tenwein {

/// Self-adjoint N^D x N^D matrix whose row/column indices factor into D
/// colors of size N each (color 1 most significant). Two numeric towers:
/// exact rational entries and double-precision complex entries.
template <typename Scalar>
class TensorMatrix {
 public:
  TensorMatrix(int N, int D, std::vector<Scalar> entries);

  static TensorMatrix identity(int N, int D);

  int side() const { return N_; }
  int colors() const { return D_; }
  long dim() const { return dim_; }
  const Scalar& at(long row, long col) const {
    return entries_[static_cast<size_t>(row * dim_ + col)];
  }
  const std::vector<Scalar>& entries() const { return entries_; }
  bool is_identity() const;

 private:
  int N_;
  int D_;
  long dim_;
  std::vector<Scalar> entries_;
};

using RatTensor = TensorMatrix<Rat>;
using CplxTensor = TensorMatrix<std::complex<double>>;

// exact check for rational entries (real symmetric)
bool is_self_adjoint(const RatTensor& a);
// within tolerance, for floating entries
bool is_self_adjoint(const CplxTensor& a, double tol);

// Trace invariant Tr_sigma(A): contract n copies of A with the color-wise
// index identifications a^c_s = b^c_{sigma_c(s)}.
Rat trace_invariant(const RatTensor& a, const PermTuple& sigma);
std::complex<double> trace_invariant(const CplxTensor& a, const PermTuple& sigma);

// n-th moment of the tensor HCIZ integral:
//   sum_{sigma,tau} Tr_sigma(A) Tr_{tau^-1}(B) prod_c W^(N)(sigma_c tau_c^-1).
// Requires N >= n.
Rat hciz_moment(const RatTensor& a, const RatTensor& b, int n, const Int& N);
std::complex<double> hciz_moment(const CplxTensor& a, const CplxTensor& b, int n, const Int& N);

// n-th cumulant: same trace-invariant sum against the cumulant Weingarten
// function W_C evaluated exactly.
Rat hciz_cumulant(const RatTensor& a, const RatTensor& b, int n, const Int& N);
std::complex<double> hciz_cumulant(const CplxTensor& a, const CplxTensor& b, int n, const Int& N);

struct MonteCarloResult {
  std::complex<double> estimate;
  double standard_error = 0.0;
  long samples = 0;
};

// Monte Carlo mean of [Tr(A U B U*)]^n over U = U^(1) x ... x U^(D), each
// factor Haar on U(N) via QR of a complex Ginibre matrix with the diagonal
// phase fix. Deterministic for a fixed seed, independent of the job count.
MonteCarloResult haar_sample_moment(const CplxTensor& a, const CplxTensor& b, int n, int N,
                                    long samples, std::uint64_t seed, int jobs = 1);

/// Tensor file contents: one of the two towers, chosen by the entry syntax
/// (all entries exact rationals/integers -> exact; any float -> complex).
struct LoadedTensor {
  bool exact = false;
  std::vector<RatTensor> rat;    // one element when exact
  std::vector<CplxTensor> cplx;  // one element otherwise

  const RatTensor& rational() const { return rat.front(); }
  const CplxTensor& complex() const { return cplx.front(); }
};

// JSON container {"n": N, "d": D, "entries": [...]} with row-major entries:
// strings "p/q" or integers for the exact tower, numbers or [re,im] pairs for
// the floating tower. Self-adjointness is validated on load (exactly, or
// within sa_tol).
LoadedTensor load_tensor(const std::string& path, double sa_tol = 1e-9);
LoadedTensor parse_tensor(const std::string& json_text, double sa_tol = 1e-9);

CplxTensor to_complex(const RatTensor& a);

}  // namespace tenwein
