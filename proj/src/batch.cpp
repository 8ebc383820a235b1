#include "facelex/batch.hpp"

#include <optional>

namespace facelex {

std::vector<FaceDescriptor> proper_faces(const Polytope& p) {
  std::vector<FaceDescriptor> out;
  for (auto& f : p.all_faces()) {
    if (f.vertex_indices.size() != p.num_vertices()) out.push_back(std::move(f));
  }
  return out;
}

namespace {

FaceCertification certify_one(const Polytope& p, const FaceDescriptor& face) {
  auto rank_one = std::get<FaceCertificate>(certify(p, face));
  auto chain = chain_certificate(p, face);
  auto rank_one_verdict = verify_certificate(p, face, rank_one);
  auto chain_verdict = verify_certificate(p, face, chain);
  return FaceCertification{face, std::move(rank_one), std::move(chain), std::move(rank_one_verdict),
                           std::move(chain_verdict)};
}

}  // namespace

std::vector<FaceCertification> certify_faces(const Polytope& p, const std::vector<FaceDescriptor>& faces) {
  std::vector<std::optional<FaceCertification>> slots(faces.size());
  parallel_for_index(faces.size(), [&](std::size_t i) { slots[i] = certify_one(p, faces[i]); });
  std::vector<FaceCertification> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<FaceCertification> certify_faces_serial(const Polytope& p, const std::vector<FaceDescriptor>& faces) {
  std::vector<FaceCertification> out;
  out.reserve(faces.size());
  for (const auto& f : faces) out.push_back(certify_one(p, f));
  return out;
}

std::vector<EquivalenceReport> equivalence_reports(const Polytope& p, const std::vector<FaceDescriptor>& sets,
                                                   std::uint64_t seed) {
  std::vector<EquivalenceReport> out(sets.size());
  parallel_for_index(sets.size(), [&](std::size_t i) { out[i] = equivalence_report(p, sets[i], seed + i); });
  return out;
}

std::vector<EquivalenceReport> equivalence_reports_serial(const Polytope& p, const std::vector<FaceDescriptor>& sets,
                                                          std::uint64_t seed) {
  std::vector<EquivalenceReport> out;
  out.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) out.push_back(equivalence_report(p, sets[i], seed + i));
  return out;
}

}  // namespace facelex
