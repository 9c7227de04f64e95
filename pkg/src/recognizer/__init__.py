# Copyright (c) 2024 The phigraph developers

from .recognizer import Recognizer, RecognitionResult, DEFAULT_BUDGET
from .recognizer import REALIZED, REFUTED, BUDGET_EXCEEDED
from .recognizer import recognize, recognize_family, certify, parse_tree
