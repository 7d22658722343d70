#pragma once

#include <array>

namespace gammaecho::cli {

/// Published long-time echo statistics used as comparison targets by the
/// `tables` command (also shipped as data/reference_tables.csv).
struct ReferenceRow {
  const char* state;  // "coherent" (alpha = 2) or "phase" (r = 6)
  double gamma;
  double mean;
  double variance;
};

inline constexpr std::array<ReferenceRow, 16> kReferenceTables{{
    {"coherent", 1.0, 0.1524, 0.0249},
    {"coherent", 2.0, 0.2189, 0.0678},
    {"coherent", 3.0, 0.1524, 0.0278},
    {"coherent", 4.0, 0.2607, 0.0768},
    {"coherent", 1.7, 0.1434, 0.0164},
    {"coherent", 3.5, 0.1434, 0.0164},
    {"coherent", -0.5, 0.1434, 0.0164},
    {"coherent", -1.0, 0.1440, 0.0166},
    {"phase", 1.0, 0.1428, 0.0241},
    {"phase", 2.0, 0.1836, 0.0566},
    {"phase", 3.0, 0.1428, 0.0274},
    {"phase", 4.0, 0.3061, 0.0725},
    {"phase", 1.7, 0.1428, 0.0174},
    {"phase", 3.5, 0.1428, 0.0175},
    {"phase", -0.5, 0.1429, 0.0175},
    {"phase", -1.0, 0.1432, 0.0175},
}};

/// Published fit coefficient of the saturation law Z(sigma) = mu/(pi sigma).
inline constexpr double kReferenceSaturationMu = 0.923;

}  // namespace gammaecho::cli
