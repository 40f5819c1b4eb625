#include <charnum/cli/output.hpp>

#include <charnum/cli/version.hpp>

#include <sstream>

namespace charnum::cli {

std::string render(const OutputDocument& doc, Format format) {
  if (format == Format::json) {
    Json out;
    out["command"] = doc.command;
    out["version"] = doc.version;
    out["input"] = doc.input;
    out["result"] = doc.result;
    return out.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "command: " << doc.command << "\n";
  out << "version: " << doc.version << "\n";
  for (const auto& [key, value] : doc.input.items())
    out << "input." << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
        << "\n";
  out << doc.text;
  return out.str();
}

std::string render_error(const std::string& command, const Json& input, const std::string& kind,
                         const std::string& message, Format format, int column) {
  if (format == Format::json) {
    Json out;
    out["command"] = command;
    out["version"] = kVersion;
    out["input"] = input;
    Json error;
    error["kind"] = kind;
    error["message"] = message;
    if (column > 0) error["column"] = column;
    out["error"] = error;
    return out.dump(2) + "\n";
  }
  return "error: " + kind + ": " + message + "\n";
}

Json to_json(const PartitionVector& v) {
  Json out = Json::object();
  const auto& keys = v.keys();
  for (std::size_t i = 0; i < keys.size(); ++i) out[keys[i].to_string()] = to_string(v[i]);
  return out;
}

std::string to_text(const PartitionVector& v, const std::string& prefix) {
  std::string out;
  const auto& keys = v.keys();
  for (std::size_t i = 0; i < keys.size(); ++i)
    out += prefix + keys[i].to_string() + " = " + to_string(v[i]) + "\n";
  return out;
}

}  // namespace charnum::cli
