#pragma once

// Rendering of analysis results. JSON documents carry "schema": "tsj/1";
// variable indices are 1-based, rationals are strings "p/q", and naturals
// beyond 64 bits are decimal strings.

#include <string>

#include "tsj/analysis.hpp"

namespace tsj {

struct RenderOptions {
  bool strata_detail = false;
  bool integer_weights = false;
  bool trace = false;
};

std::string analysis_json(const AnalysisReport& report, const RenderOptions& options = {});
std::string analysis_text(const AnalysisReport& report, const RenderOptions& options = {});

std::string reconstruction_json(const AnalysisReport& report, const RenderOptions& options = {});
std::string reconstruction_text(const AnalysisReport& report, const RenderOptions& options = {});

std::string classification_json(const AnalysisReport& report);
std::string classification_text(const AnalysisReport& report);

std::string strata_json(const AnalysisReport& report);
std::string strata_text(const AnalysisReport& report);

}  // namespace tsj
