#pragma once

#include <string>

#include "fuzzy/fourier.hpp"

namespace fuzzy {

// JSON text round trips. Callable profiles throw CapabilityError.
std::string to_json(const ProfileFunction& p);
std::string to_json(const FourierFunction& f);
std::string to_json(const MatrixFourierFunction& f);

ProfileFunction profile_from_json(const std::string& text);
FourierFunction fourier_from_json(const std::string& text);
MatrixFourierFunction matrix_fourier_from_json(const std::string& text);

}  // namespace fuzzy
