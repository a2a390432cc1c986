#pragma once

// "brauer-report/1": a command echo, structured results and a list of pass/fail/info checks.

#include "brauer/field.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace brauer {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "brauer-report/1";

enum class Status { pass, fail, info };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "info";
  }
}

struct Check {
  std::string name;
  Status status = Status::info;
  std::string detail;
};

class Report {
 public:
  Report(std::string command, Json args) : command_(std::move(command)), args_(std::move(args)) {}

  Json& results() { return results_; }
  const Json& results() const { return results_; }
  const std::vector<Check>& checks() const { return checks_; }
  const std::string& command() const { return command_; }

  void check(std::string name, bool ok, std::string detail = {}) {
    checks_.push_back({std::move(name), ok ? Status::pass : Status::fail, std::move(detail)});
  }
  void info(std::string name, std::string detail) { checks_.push_back({std::move(name), Status::info, std::move(detail)}); }

  /// No check failed.
  bool passed() const {
    for (const auto& c : checks_)
      if (c.status == Status::fail) return false;
    return true;
  }

  /// First check with this name, or nullptr.
  const Check* find(const std::string& name) const {
    for (const auto& c : checks_)
      if (c.name == name) return &c;
    return nullptr;
  }

  Json to_json() const {
    Json j;
    j["schema"] = kReportSchema;
    j["command"] = {{"name", command_}, {"args", args_}};
    j["results"] = results_.is_null() ? Json::object() : results_;
    Json cs = Json::array();
    for (const auto& c : checks_) cs.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    j["checks"] = cs;
    j["status"] = passed() ? "pass" : "fail";
    return j;
  }

  /// One row per leaf of the results tree, then one per check.
  std::string to_csv() const {
    std::ostringstream os;
    os << "section,key,value\n";
    os << "schema,," << kReportSchema << '\n';
    os << "command,name," << csv_field(command_) << '\n';
    for (const auto& [k, v] : args_.items()) os << "command," << csv_field(k) << ',' << csv_field(scalar(v)) << '\n';
    flatten(os, results_.is_null() ? Json::object() : results_, "");
    for (const auto& c : checks_)
      os << "check," << csv_field(c.name) << ','
         << csv_field(to_string(c.status) + (c.detail.empty() ? std::string() : ": " + c.detail)) << '\n';
    os << "status,," << (passed() ? "pass" : "fail") << '\n';
    return os.str();
  }

  std::string to_text() const {
    std::ostringstream os;
    os << command_;
    for (const auto& [k, v] : args_.items()) os << ' ' << k << '=' << scalar(v);
    os << '\n';
    text_tree(os, results_.is_null() ? Json::object() : results_, 1);
    for (const auto& c : checks_) {
      os << '[' << to_string(c.status) << "] " << c.name;
      if (!c.detail.empty()) os << ": " << c.detail;
      os << '\n';
    }
    os << "status: " << (passed() ? "pass" : "fail") << '\n';
    return os.str();
  }

  std::string render(const std::string& format) const {
    if (format == "json") return to_json().dump(2) + "\n";
    if (format == "csv") return to_csv();
    if (format == "text") return to_text();
    throw std::invalid_argument("unknown format: " + format);
  }

 private:
  static std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

  static std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + '"';
  }

  static void flatten(std::ostringstream& os, const Json& j, const std::string& path) {
    if (j.is_object()) {
      for (const auto& [k, v] : j.items()) flatten(os, v, path.empty() ? k : path + "." + k);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(os, j[i], path + "[" + std::to_string(i) + "]");
    } else {
      os << "result," << csv_field(path) << ',' << csv_field(scalar(j)) << '\n';
    }
  }

  static void text_tree(std::ostringstream& os, const Json& j, int depth) {
    const std::string pad(2 * depth, ' ');
    for (const auto& [k, v] : j.items()) {
      if (v.is_object()) {
        os << pad << k << ":\n";
        text_tree(os, v, depth + 1);
      } else if (v.is_array() && !v.empty() && v.front().is_object()) {
        os << pad << k << ":\n";
        for (const auto& row : v) {
          os << pad << "  -";
          for (const auto& [rk, rv] : row.items()) os << ' ' << rk << '=' << scalar(rv);
          os << '\n';
        }
      } else {
        os << pad << k << ": " << scalar(v) << '\n';
      }
    }
  }

  std::string command_;
  Json args_;
  Json results_ = Json::object();
  std::vector<Check> checks_;
};

inline std::string json_scalar(const Rational& q) { return to_string(q); }

}  // namespace brauer
