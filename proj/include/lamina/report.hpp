#pragma once

#include <string>

#include "lamina/criterion.hpp"
#include "lamina/finest.hpp"

namespace lamina {

// Line-oriented "key: value" reports with a fixed key order.
std::string format_validation(const Lamination& lam, const InvarianceReport& report);
std::string format_faces(const GapAnalysis& analysis);
std::string format_classification(const GapAnalysis& analysis);
std::string format_criterion(const Lamination& lam, const CriterionReport& report);
std::string format_slicing(const SlicingFamily& fam, const SlicingResult& result);
std::string format_valence(const ValenceReport& report);

}  // namespace lamina
