#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lamina/lamination.hpp"

namespace lamina {

struct LamFile {
  int degree = 2;
  Mode mode = Mode::Equivalence;
  int depth = 0;
  std::vector<AngleClass> classes;
  std::vector<int> levels;  // parallel to classes
  std::vector<ExplicitPreimage> preimages;  // generator = index into classes
};

// Classes come back in canonical order; preimage indices follow them.
// With reject_linked false, linked classes are left for validate() to report.
LamFile parse_lam(std::string_view text, bool reject_linked = true);
std::string serialize(const LamFile& file);

Lamination to_lamination(const LamFile& file);
LamFile from_lamination(const Lamination& lam);

struct FamilyFile {
  std::vector<AngleClass> sets;
};

FamilyFile parse_family(std::string_view text);
std::string serialize(const FamilyFile& file);

std::string read_text(const std::string& path);

}  // namespace lamina
