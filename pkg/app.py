"""Command line entry point: ``python app.py <command> <source> [options]``."""
from dotenv import load_dotenv

from semirep.cli import main

# Load environment variables
load_dotenv()

if __name__ == "__main__":
    main()
