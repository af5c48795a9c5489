"""
File Utility Functions

Helpers for reading job payloads and writing JSON reports.
"""

import json
import logging
import os

logger = logging.getLogger(__name__)


def ensure_directory_exists(directory_path):
    """
    Ensure a directory exists, creating it if necessary.

    Args:
        directory_path (str): Path to the directory

    Returns:
        bool: True if directory exists or was created successfully
    """
    try:
        os.makedirs(directory_path, exist_ok=True)
        return True
    except OSError as e:
        logger.error(f"Error creating directory {directory_path}: {str(e)}")
        return False


def read_json(file_path):
    """
    Read and parse a JSON file.

    Args:
        file_path (str): Path to the JSON file

    Returns:
        dict/list: Parsed JSON data

    Raises:
        OSError: If the file cannot be opened
        json.JSONDecodeError: If the content is not JSON
    """
    with open(file_path, 'r', encoding='utf-8') as f:
        return json.load(f)


def safe_json_write(file_path, data, indent=2):
    """
    Write data to a JSON file, creating parent directories.

    Args:
        file_path (str): Path to write the JSON file
        data (dict/list): Data to serialize to JSON
        indent (int): Indentation level for pretty printing

    Returns:
        bool: True if write succeeded, False if it failed
    """
    try:
        directory = os.path.dirname(file_path)
        if directory:
            os.makedirs(directory, exist_ok=True)

        with open(file_path, 'w', encoding='utf-8') as f:
            json.dump(data, f, indent=indent, sort_keys=True)
            f.write('\n')
        return True
    except (OSError, TypeError) as e:
        logger.error(f"Error writing JSON to {file_path}: {str(e)}")
        return False
