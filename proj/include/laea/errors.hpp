#pragma once

#include <stdexcept>
#include <string>

namespace laea {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// A caller violated an operation's preconditions.
class InvalidInput : public Error {
    using Error::Error;
};

/// An operation was invoked on an object whose state does not support it.
class InvalidState : public Error {
    using Error::Error;
};

/// A model reply could not be parsed into a prediction.
class MalformedResponse : public Error {
    using Error::Error;
};

/// The backend stayed unreachable after exhausting the retry budget.
class BackendUnavailable : public Error {
    using Error::Error;
};

/// A prompt handed to a backend is missing one of the required blocks.
class PromptStructureError : public Error {
    using Error::Error;
};

/// An experiment configuration file is invalid.
class ConfigError : public Error {
    using Error::Error;
};

}  // namespace laea
