// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>

#include "sdtn/harmonics.hpp"

namespace sdtn {

// Coefficient-vector file formats.
//
// CSV:   metadata lines "# n=<int> R=<float>", header "m,j,re,im", one
//        entry per row.
// JSON:  {"n": <int>, "R": <float>, "entries": [{"m":..,"j":..,"re":..,"im":..}]}

std::string coefficients_to_csv(const BoundaryCoefficients& coeffs);
BoundaryCoefficients coefficients_from_csv(std::istream& in);

std::string coefficients_to_json(const BoundaryCoefficients& coeffs);
BoundaryCoefficients coefficients_from_json(std::istream& in);

// Dispatch on the ".json" / ".csv" extension.
BoundaryCoefficients read_coefficients_file(const std::string& path);
void write_coefficients_file(const std::string& path, const BoundaryCoefficients& coeffs);

}  // namespace sdtn
