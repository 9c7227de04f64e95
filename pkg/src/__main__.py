# Copyright (c) 2024 The phigraph developers

from .cli import main

main()
