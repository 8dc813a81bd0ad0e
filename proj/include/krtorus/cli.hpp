#pragma once

// JSON front end: one request document in, one response document out.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace krtorus::cli {

using Json = nlohmann::json;

inline constexpr std::string_view kSchemaVersion = "1";

enum ExitCode { kOk = 0, kSchemaError = 2, kMathDomainError = 3 };

/// Malformed request. `pointer` is a JSON pointer into the request document.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string pointer, const std::string& message)
      : std::runtime_error(message), pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

const std::vector<std::string>& commands();

/// Dispatches a request {schema_version, command?, payload}. When `command` is
/// nonempty it must agree with the document. Throws SchemaError or
/// MathDomainError.
Json run(const Json& request, std::string_view command = {});

/// Error document for a failed request.
Json error_response(std::string_view command, std::string_view kind,
                    std::string_view message, std::string_view pointer = {});

/// Renders a response, with 8-degree tables laid out as j | j+4.
std::string render_markdown(const Json& response);

/// Full command-line entry point; returns the process exit status.
int main(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace krtorus::cli
