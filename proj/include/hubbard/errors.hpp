#pragma once

#include <stdexcept>
#include <string>

namespace hubbard {

/// U = 0: the dimer branch is empty and the scattering length diverges.
struct ZeroInteraction : std::domain_error {
  explicit ZeroInteraction(const std::string& what)
      : std::domain_error("zero interaction: " + what) {}
};

/// |K| = pi/d, J_K = 0: the relative-motion band is flat.
struct FlatBand : std::domain_error {
  explicit FlatBand(const std::string& what)
      : std::domain_error("flat band (J_K = 0): " + what) {}
};

/// sin(k d) = 0 with U != 0: the phase-shift formula is singular.
struct SingularRelativeMomentum : std::domain_error {
  explicit SingularRelativeMomentum(const std::string& what)
      : std::domain_error("singular relative momentum: " + what) {}
};

/// |E| >= 2 J_K: no scattering states at this energy.
struct OutsideBand : std::domain_error {
  explicit OutsideBand(const std::string& what)
      : std::domain_error("energy outside the scattering band: " + what) {}
};

}  // namespace hubbard
