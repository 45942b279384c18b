#pragma once

#include "lrq/spectra.hpp"

namespace lrq::spectra::detail {

double lattice_kac_norm(const CouplingSpec& spec);

}  // namespace lrq::spectra::detail
