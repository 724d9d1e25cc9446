#pragma once

#include <stdexcept>
#include <string>

namespace corrcp {

// Base class for everything thrown by the library.  DataError marks defects
// in user-supplied data (CLI exit code 2), MethodError marks statistical or
// configuration preconditions that fail at run time (exit code 3), and
// UsageError marks command-line misuse (exit code 1).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DataError : public Error {
public:
    using Error::Error;
};

class MethodError : public Error {
public:
    using Error::Error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

// A row whose sample variance (divisor T-1) is <= 0 or below 1e-300.
// Degenerate rows are a hard error: silently dropping them would change p
// and the meaning of every reported (i, j) pair.
class ZeroVarianceRow : public DataError {
public:
    explicit ZeroVarianceRow(int row)
        : DataError("row " + std::to_string(row) + " has (near-)zero sample variance"),
          row_(row) {}
    int row() const noexcept { return row_; }

private:
    int row_;
};

class NonFiniteCell : public DataError {
public:
    NonFiniteCell(int row, int col)
        : DataError("non-finite value at row " + std::to_string(row) + ", column " +
                    std::to_string(col)),
          row_(row),
          col_(col) {}
    int row() const noexcept { return row_; }
    int col() const noexcept { return col_; }

private:
    int row_;
    int col_;
};

class EmptyFile : public DataError {
public:
    explicit EmptyFile(const std::string& path) : DataError("no data rows in " + path) {}
};

class RaggedRows : public DataError {
public:
    explicit RaggedRows(int row)
        : DataError("row " + std::to_string(row) + " has a different number of cells"),
          row_(row) {}
    int row() const noexcept { return row_; }

private:
    int row_;
};

class NonNumericCell : public DataError {
public:
    NonNumericCell(int row, int col, const std::string& text)
        : DataError("cell at row " + std::to_string(row) + ", column " + std::to_string(col) +
                    " is not numeric: \"" + text + "\""),
          row_(row),
          col_(col) {}
    int row() const noexcept { return row_; }
    int col() const noexcept { return col_; }

private:
    int row_;
    int col_;
};

class IoError : public DataError {
public:
    using DataError::DataError;
};

class DimensionTooSmall : public MethodError {
public:
    explicit DimensionTooSmall(int p)
        : MethodError("need at least 2 variables, got p=" + std::to_string(p)) {}
};

class SplitOutOfRange : public MethodError {
public:
    SplitOutOfRange(int t, int T)
        : MethodError("split index t=" + std::to_string(t) + " outside valid range for T=" +
                      std::to_string(T)) {}
};

class SeriesTooShort : public MethodError {
public:
    explicit SeriesTooShort(int T)
        : MethodError("series of length T=" + std::to_string(T) + " is too short") {}
};

class TrialCountZero : public MethodError {
public:
    TrialCountZero() : MethodError("number of signflip trials must be at least 1") {}
};

class InvalidConfig : public MethodError {
public:
    using MethodError::MethodError;
};

class EmptySupport : public MethodError {
public:
    EmptySupport() : MethodError("no component exceeds the threshold; estimation cannot proceed") {}
};

class MinorityWindowTooSmall : public MethodError {
public:
    explicit MinorityWindowTooSmall(int size)
        : MethodError("minority window has " + std::to_string(size) +
                      " column(s); need at least 2") {}
};

class ZeroBandwidth : public MethodError {
public:
    ZeroBandwidth() : MethodError("median pairwise distance is zero; kernel bandwidth undefined") {}
};

class InvalidScenario : public MethodError {
public:
    using MethodError::MethodError;
};

class UnsupportedDistribution : public MethodError {
public:
    using MethodError::MethodError;
};

}  // namespace corrcp
