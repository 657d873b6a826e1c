// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Copyright 2026 The readctl Authors.
#ifndef READCTL_ERROR_H_
#define READCTL_ERROR_H_

#include <stdexcept>
#include <string>

namespace readctl {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text has no words or no sentences, so a ratio-based score is undefined.
class DegenerateText : public Error {
 public:
  using Error::Error;
};

class InvalidSigma : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class EmptyCorpus : public Error {
 public:
  using Error::Error;
};

// No hypothesis survived to min_len tokens.
class EmptyGeneration : public Error {
 public:
  using Error::Error;
};

class EmptyRun : public Error {
 public:
  using Error::Error;
};

// Pearson correlation requested over a constant (or too short) series.
class DegenerateVariance : public Error {
 public:
  using Error::Error;
};

// Malformed input file (model dump, JSONL record, manifest).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace readctl

#endif  // READCTL_ERROR_H_
