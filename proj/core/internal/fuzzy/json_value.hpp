#pragma once

#include "json.hpp"

#include "fuzzy/fourier.hpp"

namespace fuzzy {

nlohmann::json profile_to_json_value(const ProfileFunction& p);
ProfileFunction profile_from_json_value(const nlohmann::json& j);
nlohmann::json fourier_to_json_value(const FourierFunction& f);
FourierFunction fourier_from_json_value(const nlohmann::json& j);
nlohmann::json matrix_fourier_to_json_value(const MatrixFourierFunction& f);
MatrixFourierFunction matrix_fourier_from_json_value(const nlohmann::json& j);

}  // namespace fuzzy
