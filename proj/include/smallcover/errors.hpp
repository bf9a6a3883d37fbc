#ifndef SMALLCOVER_ERRORS_HPP
#define SMALLCOVER_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace smallcover {

// A characteristic-matrix condition failed at specific vertices.
struct validation_error : std::runtime_error {
    std::vector<int> offending_vertices;
    validation_error(const std::string& msg, std::vector<int> verts)
        : std::runtime_error(msg), offending_vertices(std::move(verts)) {}
};

// Degenerate geometric data: non-generic direction, empty section, missing coords.
struct geometry_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured size limit was exceeded.
struct cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Section hypotheses not met (wrong number of preimage components).
struct section_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace smallcover

#endif
