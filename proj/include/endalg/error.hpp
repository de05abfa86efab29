#ifndef ENDALG_ERROR_HPP
#define ENDALG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace endalg {

enum class Errc {
    invalid_argument,
    parse,
    context_mismatch,
    domain,
    division_by_zero,
    degree_cap,
    singular_matrix,
    decompose,
    insufficient_probes,
};

/// All library failures are reported through this exception type; the code
/// maps 1:1 onto the C API status values.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace endalg

#endif
