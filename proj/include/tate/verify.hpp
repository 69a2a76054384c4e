#pragma once

// Check reports and the fixture-directory verification suite.

#include <filesystem>
#include <string>
#include <vector>

#include "tate/fixture.hpp"

namespace tate {

enum class Status { Pass, Fail, Info };

struct CheckRow {
  std::string subject;
  std::string check;
  Status status = Status::Pass;
  std::string detail;

  friend auto operator<=>(const CheckRow&, const CheckRow&) = default;
};

enum class Format { Tsv, Plain };

/// Exit code is 0 unless some row failed; informational rows never count.
class RunReport {
 public:
  explicit RunReport(std::string command) : command_(std::move(command)) {}

  void add(std::string subject, std::string check, Status status, std::string detail = {});
  void add(CheckRow row) { rows_.push_back(std::move(row)); }

  const std::string& command() const { return command_; }
  const std::vector<CheckRow>& rows() const { return rows_; }
  std::size_t count(Status s) const;
  int exit_code() const { return count(Status::Fail) > 0 ? 1 : 0; }

  /// Command echo, rows in sorted order, then `N pass / M fail / K info`.
  std::string render(Format format = Format::Tsv) const;

 private:
  std::string command_;
  std::vector<CheckRow> rows_;
};

std::string status_name(Status s);

/// Every applicable check for one model fixture.
void verify_model(const ModelFixture& fixture, const std::string& subject, RunReport& report);

/// Runs verify_model over the `*.model` files of `dir` in name order; files
/// that fail to load produce a failing `load` row.
RunReport verify_directory(const std::filesystem::path& dir, const std::string& command);

}  // namespace tate
