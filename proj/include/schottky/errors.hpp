#ifndef SCHOTTKY_ERRORS_HPP
#define SCHOTTKY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace schottky {

// Evaluation of a formula at (or numerically indistinguishable from) its
// pole.  Distinct from std::domain_error so callers can tell "bad argument"
// apart from "argument hit a singular point".
class singularity_error : public std::domain_error {
public:
    explicit singularity_error(const std::string& what) : std::domain_error(what) {}
};

// A generator list that cannot form a Schottky configuration (fewer than two
// chains, malformed generator data).
class configuration_error : public std::runtime_error {
public:
    explicit configuration_error(const std::string& what) : std::runtime_error(what) {}
};

// A requested enumeration would exceed the node cap.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// A matrix without the structure the spectral routines require
// (reducible support, uncertifiable root bracket).
class structural_error : public std::runtime_error {
public:
    explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

// An iteration hit its cap without meeting its tolerance.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed configuration file (JSON syntax or schema violations).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace schottky

#endif
