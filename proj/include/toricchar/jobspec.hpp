#ifndef TORICCHAR_JOBSPEC_HPP
#define TORICCHAR_JOBSPEC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace toricchar {

/// one CLI invocation, fully determined (seed included) for reproducibility
struct JobSpec {
    enum class Command { FanInfo, Chow, Segre, Csm, CsmCI, Euler, All };
    enum class Format { Text, Json };

    Command command = Command::FanInfo;
    std::string space;                  // product shorthand, e.g. "P4xP2"
    std::string fan_file;               // JSON fan; exclusive with space
    std::vector<std::string> generators;
    std::string ideal_file;             // one generator per line, '#' comments
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::uint32_t prime = 32749;
    Format format = Format::Text;
    bool check = false;
    bool verify_front = false;
    bool saturate_input = false;
    int workers = 0;                    // 0 = all hardware threads
};

struct JobResult {
    int exit_code = 0;
    std::string text;   // human-readable report
    std::string json;   // machine-readable report
};

/// exit codes: 0 ok, 1 internal, 2 parse error, 3 fan validation,
/// 4 affine-codimension condition, 5 nef failure, 6 non-generic draws
JobResult run(const JobSpec& spec);

class ChowRing;
class ChowClass;
/// re-parse a serialized class (the "segre"/"csm" objects of the JSON report)
ChowClass chow_class_from_json_text(const ChowRing& chow, const std::string& text);

} // namespace toricchar

#endif
