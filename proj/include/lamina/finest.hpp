#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lamina/gaps.hpp"

namespace lamina {

struct SuperGap {
  enum class Kind { Wandering, Periodic, Degenerate };
  Kind kind = Kind::Degenerate;
  std::vector<std::size_t> member_faces;  // closed faces of the arrangement
  AngleClass basis;
  std::optional<int> period;
  std::optional<int> preperiod;
};

const char* to_string(SuperGap::Kind kind);

struct FinestQuotient {
  int degree = 2;
  int depth = 0;
  std::vector<AngleClass> classes;
  std::vector<int> levels;                           // parallel to classes
  std::vector<std::vector<std::string>> certificate;  // parallel to classes
  std::vector<std::string> notes;                    // closing leaves, skipped checks

  Lamination to_lamination() const;
  std::string certificate_text() const;
};

std::vector<SuperGap> super_gaps(const Lamination& lam, int horizon = 64);
FinestQuotient finest_quotient(const Lamination& lam, int horizon = 64);

struct ValenceEntry {
  Angle endpoint;
  std::vector<Leaf> leaves;         // counterclockwise from the endpoint
  std::vector<std::string> middle;  // provenance of the middle leaves
  bool clause_ok = true;
};

struct ValenceReport {
  std::vector<ValenceEntry> entries;  // endpoints with three or more leaves
  std::size_t max_valence = 0;
  std::vector<Angle> hard_violations;  // five or more leaves
  bool passed() const { return hard_violations.empty(); }
};

ValenceReport endpoint_valence_check(const Lamination& lam);

}  // namespace lamina
