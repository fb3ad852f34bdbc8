#pragma once

#include <stdexcept>
#include <string>

namespace altan {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// graph_core
struct IndexOutOfRange : Error { using Error::Error; };
struct SelfLoop : Error { using Error::Error; };
struct InvalidAttachment : Error { using Error::Error; };

// exact_linalg
struct ConvergenceFailure : Error { using Error::Error; };

// kernel_analysis
struct OddAttachment : Error { using Error::Error; };
struct NotAKernelVector : Error { using Error::Error; };
struct TheoremViolation : Error { using Error::Error; };

// patch_model
struct InconsistentEmbedding : Error { using Error::Error; };
struct AmbiguousOuterFace : Error { using Error::Error; };
struct NotAPatch : Error { using Error::Error; };
struct NoDegreeTwoVertices : Error { using Error::Error; };
struct NotBipartite : Error { using Error::Error; };
struct IdentityViolation : Error { using Error::Error; };
struct InvalidCode : Error { using Error::Error; };

// generators
struct CapExceeded : Error { using Error::Error; };

// survey_cli
struct MalformedHeader : Error { using Error::Error; };
struct TruncatedRecord : Error { using Error::Error; };
struct IngestionError : Error { using Error::Error; };
struct CacheCorrupt : Error { using Error::Error; };

} // namespace altan
