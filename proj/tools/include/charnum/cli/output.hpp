#pragma once

#include <charnum/partition_vector.hpp>

#include <json.hpp>

#include <string>

namespace charnum::cli {

using Json = nlohmann::ordered_json;

enum class Format { text, json };

/// Result of one CLI command. `result` carries the machine-readable payload;
/// `text` holds the human-readable body for Format::text.
struct OutputDocument {
  std::string command;
  Json input = Json::object();
  Json result = Json::object();
  std::string text;
  std::string version;
};

/// Byte-deterministic rendering; ends with a newline.
std::string render(const OutputDocument& doc, Format format);

/// Usage-error document: {"command", "version", "input", "error": {...}}.
std::string render_error(const std::string& command, const Json& input, const std::string& kind,
                         const std::string& message, Format format, int column = 0);

/// Partition-keyed object, keys like "[2,1]", values "num/den", canonical order.
Json to_json(const PartitionVector& v);

/// One "<prefix>[2,1] = num/den" line per entry.
std::string to_text(const PartitionVector& v, const std::string& prefix);

}  // namespace charnum::cli
