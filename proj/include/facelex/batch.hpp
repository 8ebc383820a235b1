#pragma once

// Per-face batch kernels. Each face is processed independently, so the
// OpenMP versions write into preallocated slots and return exactly what the
// serial versions return, whatever the thread count.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <vector>

#include "facelex/face_certify.hpp"
#include "facelex/polytope.hpp"

namespace facelex {

/// Runs fn(i) for i in [0, n) on the OpenMP team. The first exception (by
/// index) thrown by any iteration is rethrown after the loop.
template <class Fn>
void parallel_for_index(std::size_t n, Fn&& fn) {
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

/// Nonempty faces other than P itself, in all_faces order.
std::vector<FaceDescriptor> proper_faces(const Polytope& p);

struct FaceCertification {
  FaceDescriptor face;
  FaceCertificate rank_one;
  FaceCertificate chain;
  Verdict rank_one_verdict;
  Verdict chain_verdict;
};

/// Rank-1 and chain certificates, each verified, for every face.
std::vector<FaceCertification> certify_faces(const Polytope& p, const std::vector<FaceDescriptor>& faces);
std::vector<FaceCertification> certify_faces_serial(const Polytope& p, const std::vector<FaceDescriptor>& faces);

/// Equivalence report per vertex set; item i is sampled with seed + i.
std::vector<EquivalenceReport> equivalence_reports(const Polytope& p, const std::vector<FaceDescriptor>& sets,
                                                   std::uint64_t seed = Sampler::kDefaultSeed);
std::vector<EquivalenceReport> equivalence_reports_serial(const Polytope& p, const std::vector<FaceDescriptor>& sets,
                                                          std::uint64_t seed = Sampler::kDefaultSeed);

}  // namespace facelex
