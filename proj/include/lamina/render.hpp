#pragma once

#include <string>

#include "lamina/lamination.hpp"

namespace lamina {

struct RenderOptions {
  bool tint = false;   // fill faces by classification kind
  bool arcs = false;   // leaves as arcs orthogonal to the circle
  int horizon = 64;
  int size = 512;
};

std::string render(const Lamination& lam, const RenderOptions& options = {});

}  // namespace lamina
