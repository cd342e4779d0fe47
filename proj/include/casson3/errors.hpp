// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace casson3 {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

class SnapError : public Error {
public:
	enum class Kind { Ambiguous, NoCandidate };

	SnapError(Kind kind, const std::string &what) : Error(what), kind_(kind) {}
	Kind kind() const noexcept { return kind_; }

private:
	Kind kind_;
};

class SingularSystem : public Error { using Error::Error; };
class InvalidSeifertData : public Error { using Error::Error; };
class InvalidSurgery : public Error { using Error::Error; };
class UnsupportedFamily : public Error { using Error::Error; };
class ConventionMismatch : public Error { using Error::Error; };
class SnapFailure : public Error { using Error::Error; };
class GradingFormulaUnavailable : public Error { using Error::Error; };
class InapplicableMove : public Error { using Error::Error; };
class InvalidComplex : public Error { using Error::Error; };
class MissingClosedForm : public Error { using Error::Error; };
class DegreeExceeded : public Error { using Error::Error; };
class NotCoprime : public Error { using Error::Error; };

} // namespace casson3
