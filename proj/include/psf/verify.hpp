#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "psf/embedder.hpp"

namespace psf {

struct AcceptanceOptions {
  int jobs = 1;
  long long embed_budget = kDefaultEmbedBudget;
  std::ostream* progress = nullptr;  // one line per criterion when set
};

struct CriterionOutcome {
  int id = 0;
  std::string name;
  bool pass = false;
  long long checked = 0;
  long long failures = 0;
  double seconds = 0.0;
  std::string note;
};

struct VerifyReport {
  std::vector<CriterionOutcome> criteria;
  nlohmann::ordered_json instances = nlohmann::ordered_json::array();
  bool all_pass = false;

  nlohmann::ordered_json to_json() const;
};

// Runs the full acceptance suite (nine criteria) and returns the report.
VerifyReport run_acceptance(const AcceptanceOptions& opt = {});

}  // namespace psf
