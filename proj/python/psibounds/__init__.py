# Copyright 2026 The psibounds Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Digamma-family kernels and sharp psi / harmonic-number enclosures."""

from ._core import (
    EULER_GAMMA,
    DomainError,
    OverflowError,
    PropertyReport,
    ResourceError,
    UsageError,
    digamma,
    f,
    fprime,
    harmonic_enclosure,
    harmonic_exact,
    log_expm1_recip,
    phi,
    positivity,
    psi_enclosure,
    tetragamma,
    trigamma,
    verify,
)

__all__ = [
    "EULER_GAMMA",
    "DomainError",
    "OverflowError",
    "PropertyReport",
    "ResourceError",
    "UsageError",
    "digamma",
    "f",
    "fprime",
    "harmonic_enclosure",
    "harmonic_exact",
    "log_expm1_recip",
    "phi",
    "positivity",
    "psi_enclosure",
    "tetragamma",
    "trigamma",
    "verify",
]
