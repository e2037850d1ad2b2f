import sys

from pancakes.cli.main import main

sys.exit(main())
