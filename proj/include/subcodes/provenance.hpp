#pragma once

#include <string>
#include <utility>
#include <vector>

namespace subcodes {

/// How an artifact was built: construction name, its parameters and any
/// decisions worth carrying into serialized output.
struct Provenance {
  std::string construction;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> notes;

  Provenance& with(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  Provenance& note(std::string text) {
    notes.push_back(std::move(text));
    return *this;
  }

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

}  // namespace subcodes
