# -*- coding: utf-8 -*-
#
#         ToricGB: Groebner Bases of Simplicial Toric Ideals
#   ---------------------------------------------------------------
#     [  Documentation: README.md and docs/ in the source tree    ]
#
# Copyright (C) 2021 The ToricGB Developers.
#
# ToricGB is licensed under the BSD 3-Clause License; see the included
# LICENSE file for details.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT.  IN NO EVENT SHALL THE
# AUTHORS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN
# ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION
# WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.
#

""" ToricGB Unit Test Suite

To run all available tests run `pytest -v` from the parent directory
(i.e. the root project folder of ToricGB containing the toricgb/ and
tests/ folders).  This will automatically find and run all of the test
cases in the tests/ folder and display the results.
"""
