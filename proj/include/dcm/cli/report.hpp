#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace dcm::cli {

/// Exit statuses shared by every command.
enum ExitStatus : int { kPass = 0, kFailure = 1, kUsage = 2 };

/// Machine-readable command report. Integers are serialized as decimal
/// strings; keys are emitted in sorted order so two runs with the same flags
/// differ only in wall_time_s.
class Report {
public:
    Report(std::string command, std::vector<std::string> argv);

    nlohmann::json& parameters() { return parameters_; }
    nlohmann::json& results() { return results_; }

    /// Records an exact check; the verdict is "pass" iff expected == actual.
    bool check(const std::string& name, const std::string& expected, const std::string& actual);
    /// Records a predicate check with a free-form description of both sides.
    bool check(const std::string& name, bool ok, const std::string& expected, const std::string& actual);

    void set_error(const std::string& message, int status);
    void set_wall_time(double seconds) { wall_time_ = seconds; }

    std::size_t check_count() const { return checks_.size(); }
    std::size_t failure_count() const { return failures_; }
    int exit_status() const;

    nlohmann::json to_json() const;
    std::string dump() const { return to_json().dump(2); }

private:
    std::string command_;
    std::vector<std::string> argv_;
    nlohmann::json parameters_ = nlohmann::json::object();
    nlohmann::json results_ = nlohmann::json::object();
    nlohmann::json checks_ = nlohmann::json::array();
    std::size_t failures_ = 0;
    std::string error_;
    int error_status_ = kPass;
    double wall_time_ = 0;
};

}  // namespace dcm::cli
