#pragma once

// Unit system: energies in eV, lengths in nm, times in fs.  Momenta are
// carried as hbar times the wavenumber (eV*fs/nm), so plane waves are
// exp(i k x / hbar) and E = k^2 / (2 m) with masses in eV*fs^2/nm^2.

namespace stepswitch::units {

inline constexpr double hbar = 0.6582119569;           // eV*fs
inline constexpr double hbar2_over_me = 0.076199682;   // eV*nm^2
inline constexpr double electron_mass = hbar * hbar / hbar2_over_me;  // eV*fs^2/nm^2

}  // namespace stepswitch::units
