import sys

from birburn.cli import main

sys.exit(main())
