import os

from pydantic import BaseSettings, Field
from typing import Literal, Union


class BaseConfig(BaseSettings):
    # app config
    environment: Literal["production", "staging", "localhost"] = "localhost"
    app_version: str = "0.1.0"
    root_folder: str = os.path.dirname(__file__)

    # logging config
    export_logs: bool = False
    log_file_location: str = "./logs/sociolect.log"

    # resources
    dale_chall_list: str = os.path.join(
        os.path.dirname(__file__), "resources", "dale_chall_easy_words.txt"
    )
    language_profiles_folder: str = os.path.join(
        os.path.dirname(__file__), "resources", "languages"
    )

    # language identification
    language_profile_size: int = 1000  # trigrams kept per ranked profile
    language_min_chars: int = 20  # shorter texts are "und"
    language_filter: bool = True
    trust_language_field: bool = False
    keep_undetermined: bool = True

    # pipeline defaults
    workdir: str = Field(default="./workdir", env="SOCIOLECT_WORKDIR")
    seed: int = 42
    min_reviews: int = 9
    train_fraction: float = 0.8
    runs: int = 2
    word_ngrams: str = "1,3-6"
    char_ngrams: str = "3-6"

    class Config:
        case_sensitive = False
        env_file = ".env"
        extra = "allow"


class ProdConfig(BaseConfig):
    environment: Literal["production"]
    log_level: Literal["INFO", "WARNING", "ERROR", "CRITICAL"] = "INFO"
    debug: bool = False


class DevConfig(BaseConfig):
    environment: Literal["staging", "localhost"] = "localhost"
    log_level: Literal["DEBUG", "INFO"] = "DEBUG"
    debug: bool = True


def get_configuration() -> Union[DevConfig, ProdConfig]:
    environment_name = BaseConfig().environment
    config = {"staging": DevConfig, "production": ProdConfig}
    configuration_class = config.get(environment_name, DevConfig)
    return configuration_class()


config = get_configuration()
