#include <cstdlib>
#include <string>

#include "colonlab/errors.hpp"
#include "colonlab/kernels.hpp"

namespace colonlab::kernels {

namespace {

constexpr ModKernels kScalar{Isa::Scalar, &scalar::axpy, &scalar::scale};
#if defined(COLONLAB_HAVE_AVX2)
constexpr ModKernels kAvx2{Isa::Avx2, &avx2::axpy, &avx2::scale};
#endif

const ModKernels& select() {
  if (const char* forced = std::getenv("COLONLAB_ISA")) {
    if (std::string(forced) == "scalar") return kScalar;
  }
#if defined(COLONLAB_HAVE_AVX2)
  if (isa_available(Isa::Avx2)) return kAvx2;
#endif
  return kScalar;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(COLONLAB_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2}) {
    if (isa_available(isa)) out.push_back(isa);
  }
  return out;
}

const ModKernels& kernels_for(Isa isa) {
  if (!isa_available(isa)) {
    throw UsageError("kernel ISA not available: " + std::string(isa_name(isa)));
  }
#if defined(COLONLAB_HAVE_AVX2)
  if (isa == Isa::Avx2) return kAvx2;
#endif
  return kScalar;
}

const ModKernels& active() {
  static const ModKernels& chosen = select();
  return chosen;
}

}  // namespace colonlab::kernels
