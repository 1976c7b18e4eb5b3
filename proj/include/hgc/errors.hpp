#pragma once

#include <stdexcept>
#include <string>

namespace hgc {

enum class ErrorKind {
    NonUniformEdge,
    VertexOutOfRange,
    DuplicateEdge,
    InvalidSize,
    TooManyEdges,
    PatternTooLarge,
    InvalidParameter,
    EmptyVertexSet,
    InstanceTooLarge,
    PreAuditFailed,
    NoValidSubgraph,
    PreconditionViolated,
    IOError,
};

/// Library error carrying a machine-checkable kind alongside the message.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::NonUniformEdge: return "NonUniformEdge";
        case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::InvalidSize: return "InvalidSize";
        case ErrorKind::TooManyEdges: return "TooManyEdges";
        case ErrorKind::PatternTooLarge: return "PatternTooLarge";
        case ErrorKind::InvalidParameter: return "InvalidParameter";
        case ErrorKind::EmptyVertexSet: return "EmptyVertexSet";
        case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
        case ErrorKind::PreAuditFailed: return "PreAuditFailed";
        case ErrorKind::NoValidSubgraph: return "NoValidSubgraph";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::IOError: return "IOError";
    }
    return "Unknown";
}

}  // namespace hgc
