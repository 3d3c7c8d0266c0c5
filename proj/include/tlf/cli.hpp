#pragma once

#include <string>
#include <vector>

namespace tlf {

struct CliResult {
    int code = 0;      // 0 success, 1 usage error, 2 domain error
    std::string out;   // report (stdout)
    std::string err;   // diagnostics (stderr)
};

// Parse and run one invocation; args excludes the program name. Never throws:
// usage problems come back as code 1, domain errors as code 2 with the
// variant named in err.
CliResult dispatch(const std::vector<std::string>& args);

// Thin wrapper for main(): runs dispatch and prints the streams.
int cli_main(int argc, char** argv);

}  // namespace tlf
