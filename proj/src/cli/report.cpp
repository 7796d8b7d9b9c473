#include "dcm/cli/report.hpp"

#include <utility>

namespace dcm::cli {

Report::Report(std::string command, std::vector<std::string> argv)
    : command_(std::move(command)), argv_(std::move(argv)) {}

bool Report::check(const std::string& name, const std::string& expected, const std::string& actual) {
    return check(name, expected == actual, expected, actual);
}

bool Report::check(const std::string& name, bool ok, const std::string& expected, const std::string& actual) {
    checks_.push_back({{"name", name}, {"expected", expected}, {"actual", actual}, {"verdict", ok ? "pass" : "fail"}});
    if (!ok) ++failures_;
    return ok;
}

void Report::set_error(const std::string& message, int status) {
    error_ = message;
    error_status_ = status;
}

int Report::exit_status() const {
    if (error_status_ != kPass) return error_status_;
    return failures_ == 0 ? kPass : kFailure;
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["command"] = command_;
    j["argv"] = argv_;
    j["parameters"] = parameters_;
    j["results"] = results_;
    j["checks"] = checks_;
    j["status"] = exit_status() == kPass ? "pass" : (exit_status() == kFailure ? "fail" : "error");
    j["exit_status"] = exit_status();
    if (!error_.empty()) j["error"] = error_;
    j["wall_time_s"] = wall_time_;
    return j;
}

}  // namespace dcm::cli
