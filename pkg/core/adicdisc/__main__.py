# -*- coding: utf-8 -*-
from adicdisc.cli import main

if __name__ == "__main__":
    main()
