#pragma once

#include <string>

#include "knotclasp/pl_function.hpp"
#include "knotclasp/step_function.hpp"

namespace knotclasp::cli {

// Self-contained SVG plots with rational tick labels.
std::string svg_step_plot(const StepFunction& f, const std::string& title);
std::string svg_pl_plot(const PLFunction& u, const std::string& title);

}  // namespace knotclasp::cli
