/*
 * Copyright 2026 The rangeesc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RANGEESC_ERROR_HPP_
#define RANGEESC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace rangeesc
{

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class NonConvergence : public Error
{
public:
  using Error::Error;
};

class InvalidSpeed : public Error
{
public:
  using Error::Error;
};

class InvalidInput : public Error
{
public:
  using Error::Error;
};

class InvalidTimestep : public Error
{
public:
  using Error::Error;
};

/// Controller configuration rejected at construction.
class ConfigError : public Error
{
public:
  using Error::Error;
};

class InvalidConfig : public Error
{
public:
  using Error::Error;
};

class MismatchedConfig : public Error
{
public:
  using Error::Error;
};

/// Malformed config file. The message carries line/column information.
class ParseError : public Error
{
public:
  using Error::Error;
};

/// Config value violates an invariant. `key_path()` names the offending key.
class ValidationError : public Error
{
public:
  ValidationError(std::string key_path, const std::string &what)
    : Error(key_path + ": " + what), key_path_{std::move(key_path)}
  {
  }

  [[nodiscard]] const std::string &key_path() const noexcept { return key_path_; }

private:
  std::string key_path_;
};

class IoError : public Error
{
public:
  using Error::Error;
};

}  // namespace rangeesc

#endif  // RANGEESC_ERROR_HPP_
